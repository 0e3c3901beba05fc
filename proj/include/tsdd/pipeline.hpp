#ifndef TSDD_PIPELINE_HPP
#define TSDD_PIPELINE_HPP

#include <cstddef>
#include <string>

#include "tsdd/discovery.hpp"
#include "tsdd/series.hpp"

namespace tsdd {

// "brute", "hotsax" or "phidd"; throws ParameterError otherwise.
Engine parse_engine(const std::string& name);

struct DiscoveryConfig {
  std::size_t n = 0;             // discord length
  std::size_t word_len = 4;
  std::size_t alphabet = 4;
  std::size_t vec_width = 8;
  Engine engine = Engine::phidd;
  int threads = 1;
  int chunk = 1;
  bool disable_pruning = false;
};

struct RunOutcome {
  DiscordResult result;
  std::size_t m = 0;
  double prep_time_s = 0.0;    // matrix, word matrix, PAA, SAX, indexes
  double search_time_s = 0.0;  // the engine proper
};

// Validates every parameter up front, runs the preparation stage
// (normalize + matrix, word matrix, PAA, SAX, candidate index, word index)
// and then the selected engine. IO stays outside; both stages are timed
// separately.
RunOutcome run_discovery(const TimeSeries& series, const DiscoveryConfig& config);

}  // namespace tsdd

#endif  // TSDD_PIPELINE_HPP
