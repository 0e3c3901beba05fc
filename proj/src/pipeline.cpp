#include "tsdd/pipeline.hpp"

#include <chrono>
#include <string>

#include "tsdd/errors.hpp"
#include "tsdd/index.hpp"
#include "tsdd/sax.hpp"

namespace tsdd {

Engine parse_engine(const std::string& name) {
  if (name == "brute") return Engine::brute;
  if (name == "hotsax") return Engine::hotsax;
  if (name == "phidd") return Engine::phidd;
  throw ParameterError("unknown engine '" + name + "' (expected brute, hotsax or phidd)");
}

namespace {

void check_config(const TimeSeries& series, const DiscoveryConfig& config) {
  validate_series(series);
  const std::size_t m = series.length();
  if (config.n < 1 || config.n > m) {
    throw ParameterError("n=" + std::to_string(config.n) +
                         " must satisfy 1 <= n <= m=" + std::to_string(m));
  }
  if (config.word_len < 1 || config.word_len > config.n) {
    throw ParameterError("word_len=" + std::to_string(config.word_len) +
                         " must satisfy 1 <= word_len <= n=" + std::to_string(config.n));
  }
  if (config.vec_width < 1) {
    throw ParameterError("vec_width must be >= 1");
  }
  if (config.threads < 1) {
    throw ParameterError("threads must be >= 1, got " + std::to_string(config.threads));
  }
  if (config.chunk < 1) {
    throw ParameterError("chunk must be >= 1, got " + std::to_string(config.chunk));
  }
  Alphabet alphabet(config.alphabet);           // rejects cardinalities outside 2..10
  dict_size(alphabet, config.word_len);         // rejects dictionaries over the guard
  const std::size_t rows = m - config.n + 1;
  if (rows < config.n + 1) {
    throw InfeasibleInputError("no subsequence has a non-self match: N=" +
                               std::to_string(rows) + " <= n=" +
                               std::to_string(config.n) + " (need m >= 2n)");
  }
}

}  // namespace

RunOutcome run_discovery(const TimeSeries& series, const DiscoveryConfig& config) {
  check_config(series, config);

  using clock = std::chrono::steady_clock;
  RunOutcome outcome;
  outcome.m = series.length();

  const auto prep_start = clock::now();
  const Alphabet alphabet(config.alphabet);
  const SubsequenceMatrix matrix =
      SubsequenceMatrix::build(series, config.n, config.vec_width);
  const WordMatrix words = build_word_matrix(alphabet, config.word_len);
  const PaaMatrix paa_matrix = paa(matrix, config.word_len);
  const SaxMatrix sax_matrix = sax(paa_matrix, alphabet);
  const DiscordIndexes indexes = DiscordIndexes::build(sax_matrix, alphabet);
  const auto prep_end = clock::now();
  outcome.prep_time_s = std::chrono::duration<double>(prep_end - prep_start).count();
  (void)words;  // built as part of the preparation stage; engines address buckets by hash

  DiscoveryOptions options;
  options.threads = config.threads;
  options.chunk = config.chunk;
  options.disable_pruning = config.disable_pruning;

  const auto search_start = clock::now();
  switch (config.engine) {
    case Engine::brute:
      outcome.result = brute_force_discord(matrix, options);
      break;
    case Engine::hotsax:
      outcome.result = hotsax_discord(matrix, indexes, options);
      break;
    case Engine::phidd:
      outcome.result = phidd_discord(matrix, indexes, options);
      break;
  }
  const auto search_end = clock::now();
  outcome.search_time_s =
      std::chrono::duration<double>(search_end - search_start).count();
  return outcome;
}

}  // namespace tsdd
