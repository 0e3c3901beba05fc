// Command-line front end: find (discord discovery), generate (synthetic
// series), bench (thread-sweep scalability report).
//
// Exit codes: 0 success, 2 parameter error, 3 input validation error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsdd/bench.hpp"
#include "tsdd/errors.hpp"
#include "tsdd/generate.hpp"
#include "tsdd/io.hpp"
#include "tsdd/pipeline.hpp"

namespace {

struct InputOptions {
  std::string input_path;
  std::string format = "csv";
  std::size_t gen_m = 0;
  std::string anomaly = "none";
  std::size_t anomaly_pos = 0;
  std::size_t anomaly_len = 64;
  std::uint64_t seed = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.input_path, "Series file to read");
  cmd->add_option("--format", in.format, "Series file format: csv or f64le")
      ->check(CLI::IsMember({"csv", "f64le"}));
  cmd->add_option("--gen-m", in.gen_m, "Generate a random-walk series of this length");
  cmd->add_option("--anomaly", in.anomaly, "Planted anomaly: none, spike or shape")
      ->check(CLI::IsMember({"none", "spike", "shape"}));
  cmd->add_option("--anomaly-pos", in.anomaly_pos, "1-based anomaly position");
  cmd->add_option("--anomaly-len", in.anomaly_len, "Extent of the shape anomaly");
  cmd->add_option("--seed", in.seed, "Generator seed");
}

tsdd::TimeSeries acquire_series(const InputOptions& in) {
  const bool from_file = !in.input_path.empty();
  const bool from_generator = in.gen_m > 0;
  if (from_file == from_generator) {
    throw tsdd::ParameterError("exactly one of --input and --gen-m is required");
  }
  if (from_file) {
    return tsdd::read_series(in.input_path, tsdd::parse_series_format(in.format));
  }
  tsdd::GeneratorSpec spec;
  spec.length = in.gen_m;
  spec.anomaly = tsdd::parse_anomaly_kind(in.anomaly);
  spec.anomaly_pos = in.anomaly_pos;
  spec.anomaly_len = in.anomaly_len;
  spec.seed = in.seed;
  return tsdd::generate_series(spec);
}

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void print_series_summary(const tsdd::TimeSeries& series) {
  const auto [lo, hi] =
      std::minmax_element(series.values.begin(), series.values.end());
  std::cerr << "series: " << series.length() << " values, min " << *lo << ", max "
            << *hi << "\n";
}

int run_find(const InputOptions& in, const tsdd::DiscoveryConfig& config,
             const std::string& output_format) {
  const tsdd::TimeSeries series = acquire_series(in);
  print_series_summary(series);
  const tsdd::RunOutcome outcome = tsdd::run_discovery(series, config);

  if (output_format == "json") {
    nlohmann::json payload{
        {"engine", std::string(tsdd::engine_name(config.engine))},
        {"m", outcome.m},
        {"n", config.n},
        {"word_len", config.word_len},
        {"alphabet", config.alphabet},
        {"threads", config.threads},
        {"pos", outcome.result.position},
        {"dist", outcome.result.distance},
        {"calls", outcome.result.calls},
        {"prep_time_s", outcome.prep_time_s},
        {"search_time_s", outcome.search_time_s},
    };
    std::cout << payload.dump(2) << "\n";
  } else {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%zu,%zu,%zu,%zu,%d,%zu,%.17g,%llu,%.9f,%.9f\n",
                  std::string(tsdd::engine_name(config.engine)).c_str(), outcome.m,
                  config.n, config.word_len, config.alphabet, config.threads,
                  outcome.result.position, outcome.result.distance,
                  static_cast<unsigned long long>(outcome.result.calls),
                  outcome.prep_time_s, outcome.search_time_s);
    std::cout << "engine,m,n,word_len,alphabet,threads,pos,dist,calls,prep_time_s,"
                 "search_time_s\n"
              << buf;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact time-series discord discovery"};
  app.require_subcommand(1);

  // find
  InputOptions find_in;
  tsdd::DiscoveryConfig config;
  config.threads = default_threads();
  std::string engine = "phidd";
  std::string output_format = "json";
  CLI::App* find = app.add_subcommand("find", "Find the discord of a series");
  add_input_options(find, find_in);
  find->add_option("--n", config.n, "Discord length")->required();
  find->add_option("--word-len", config.word_len, "SAX word length");
  find->add_option("--alphabet", config.alphabet, "SAX alphabet cardinality (2..10)");
  find->add_option("--vec-width", config.vec_width, "Row alignment in elements");
  find->add_option("--engine", engine, "brute, hotsax or phidd")
      ->check(CLI::IsMember({"brute", "hotsax", "phidd"}));
  find->add_option("--threads", config.threads, "Worker threads")->envname("THREADS");
  find->add_option("--chunk", config.chunk, "Dynamic-schedule chunk size");
  find->add_option("--output", output_format, "Result format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // generate
  tsdd::GeneratorSpec gen;
  std::string gen_anomaly = "none";
  std::string gen_output;
  std::string gen_format = "csv";
  CLI::App* generate = app.add_subcommand("generate", "Write a synthetic series");
  generate->add_option("--m", gen.length, "Series length")->required();
  generate->add_option("--anomaly", gen_anomaly, "none, spike or shape")
      ->check(CLI::IsMember({"none", "spike", "shape"}));
  generate->add_option("--anomaly-pos", gen.anomaly_pos, "1-based anomaly position");
  generate->add_option("--anomaly-len", gen.anomaly_len, "Extent of the shape anomaly");
  generate->add_option("--seed", gen.seed, "Generator seed");
  generate->add_option("--output", gen_output, "Destination path")->required();
  generate->add_option("--format", gen_format, "csv or f64le")
      ->check(CLI::IsMember({"csv", "f64le"}));

  // bench
  InputOptions bench_in;
  tsdd::BenchConfig bench_config;
  std::vector<int> bench_threads{1};
  std::vector<std::size_t> bench_n;
  std::string bench_engine = "phidd";
  std::string bench_output;
  CLI::App* bench = app.add_subcommand("bench", "Thread-sweep scalability report");
  add_input_options(bench, bench_in);
  bench->add_option("--n", bench_n, "Discord lengths to sweep")
      ->required()
      ->delimiter(',');
  bench->add_option("--threads", bench_threads, "Thread counts to sweep (must include 1)")
      ->delimiter(',')
      ->envname("THREADS");
  bench->add_option("--repeats", bench_config.repeats, "Repetitions per cell");
  bench->add_option("--engine", bench_engine, "brute, hotsax or phidd")
      ->check(CLI::IsMember({"brute", "hotsax", "phidd"}));
  bench->add_option("--word-len", bench_config.word_len, "SAX word length");
  bench->add_option("--alphabet", bench_config.alphabet, "SAX alphabet cardinality");
  bench->add_option("--vec-width", bench_config.vec_width, "Row alignment in elements");
  bench->add_option("--chunk", bench_config.chunk, "Dynamic-schedule chunk size");
  bench->add_option("--output", bench_output, "CSV destination (default stdout)");

  try {
    app.parse(argc, argv);

    if (find->parsed()) {
      config.engine = tsdd::parse_engine(engine);
      return run_find(find_in, config, output_format);
    }

    if (generate->parsed()) {
      gen.anomaly = tsdd::parse_anomaly_kind(gen_anomaly);
      const tsdd::TimeSeries series = tsdd::generate_series(gen);
      tsdd::write_series(series, gen_output, tsdd::parse_series_format(gen_format));
      print_series_summary(series);
      return 0;
    }

    if (bench->parsed()) {
      const tsdd::TimeSeries series = acquire_series(bench_in);
      bench_config.engine = tsdd::parse_engine(bench_engine);
      bench_config.n_values = bench_n;
      bench_config.thread_counts = bench_threads;
      const auto rows = tsdd::run_bench(series, bench_config);
      if (bench_output.empty()) {
        tsdd::write_bench_csv(rows, std::cout);
      } else {
        std::ofstream out(bench_output);
        if (!out) {
          throw tsdd::ValidationError("cannot open '" + bench_output + "' for writing");
        }
        tsdd::write_bench_csv(rows, out);
      }
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const tsdd::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const tsdd::ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
