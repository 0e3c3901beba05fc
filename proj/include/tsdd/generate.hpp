#ifndef TSDD_GENERATE_HPP
#define TSDD_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "tsdd/series.hpp"

namespace tsdd {

enum class AnomalyKind { none, spike, shape };

// "none", "spike" or "shape"; throws ParameterError otherwise.
AnomalyKind parse_anomaly_kind(const std::string& name);

struct GeneratorSpec {
  std::size_t length = 0;           // m
  AnomalyKind anomaly = AnomalyKind::none;
  std::size_t anomaly_pos = 0;      // 1-based; required when anomaly != none
  std::size_t anomaly_len = 64;     // extent of the shape anomaly
  std::uint64_t seed = 0;
};

// Seeded random walk with uniform[-1, 1] steps. A spike adds a large,
// locally out-of-family offset at one point; a shape anomaly replaces a
// window with a high-frequency oscillation the walk never produces.
// Identical spec gives an identical series.
TimeSeries generate_series(const GeneratorSpec& spec);

}  // namespace tsdd

#endif  // TSDD_GENERATE_HPP
