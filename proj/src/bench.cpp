#include "tsdd/bench.hpp"

#include <algorithm>
#include <cstdio>

#include "tsdd/errors.hpp"

namespace tsdd {

namespace {

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  if (k % 2 == 1) return values[k / 2];
  return 0.5 * (values[k / 2 - 1] + values[k / 2]);
}

}  // namespace

std::vector<BenchRow> run_bench(const TimeSeries& series, const BenchConfig& config) {
  if (config.repeats < 1) {
    throw ParameterError("repeats must be >= 1");
  }
  if (config.n_values.empty() || config.thread_counts.empty()) {
    throw ParameterError("bench sweep needs at least one n and one thread count");
  }
  if (std::find(config.thread_counts.begin(), config.thread_counts.end(), 1) ==
      config.thread_counts.end()) {
    throw ParameterError("thread sweep must include 1, the speedup baseline");
  }

  std::vector<BenchRow> rows;
  for (const std::size_t n : config.n_values) {
    double t1 = 0.0;
    std::vector<BenchRow> cell_rows;
    for (const int threads : config.thread_counts) {
      DiscoveryConfig run_config;
      run_config.n = n;
      run_config.word_len = config.word_len;
      run_config.alphabet = config.alphabet;
      run_config.vec_width = config.vec_width;
      run_config.engine = config.engine;
      run_config.threads = threads;
      run_config.chunk = config.chunk;

      std::vector<double> times;
      times.reserve(static_cast<std::size_t>(config.repeats));
      RunOutcome last;
      for (int r = 0; r < config.repeats; ++r) {
        last = run_discovery(series, run_config);
        times.push_back(last.prep_time_s + last.search_time_s);
      }

      BenchRow row;
      row.engine = config.engine;
      row.m = series.length();
      row.n = n;
      row.threads = threads;
      row.wall_time_s = median(times);
      row.calls = last.result.calls;
      row.pos = last.result.position;
      row.dist = last.result.distance;
      if (threads == 1) t1 = row.wall_time_s;
      cell_rows.push_back(row);
    }
    for (BenchRow& row : cell_rows) {
      row.speedup = t1 / row.wall_time_s;
      row.efficiency = row.speedup / static_cast<double>(row.threads);
      rows.push_back(row);
    }
  }
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "engine,m,n,threads,wall_time_s,calls,pos,dist,speedup,efficiency\n";
  char buf[256];
  for (const BenchRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%zu,%zu,%d,%.9f,%llu,%zu,%.17g,%.6f,%.6f\n",
                  std::string(engine_name(row.engine)).c_str(), row.m, row.n,
                  row.threads, row.wall_time_s,
                  static_cast<unsigned long long>(row.calls), row.pos, row.dist,
                  row.speedup, row.efficiency);
    out << buf;
  }
}

}  // namespace tsdd
