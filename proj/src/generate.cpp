#include "tsdd/generate.hpp"

#include <cmath>
#include <random>
#include <string>

#include "tsdd/errors.hpp"

namespace tsdd {

AnomalyKind parse_anomaly_kind(const std::string& name) {
  if (name == "none") return AnomalyKind::none;
  if (name == "spike") return AnomalyKind::spike;
  if (name == "shape") return AnomalyKind::shape;
  throw ParameterError("unknown anomaly kind '" + name +
                       "' (expected none, spike or shape)");
}

TimeSeries generate_series(const GeneratorSpec& spec) {
  if (spec.length < 1) {
    throw ParameterError("generator length must be >= 1");
  }
  const std::size_t extent = spec.anomaly == AnomalyKind::shape ? spec.anomaly_len : 1;
  if (spec.anomaly != AnomalyKind::none) {
    if (spec.anomaly_pos < 1 || spec.anomaly_pos - 1 + extent > spec.length) {
      throw ParameterError("anomaly at position " + std::to_string(spec.anomaly_pos) +
                           " with extent " + std::to_string(extent) +
                           " does not fit in series of length " +
                           std::to_string(spec.length));
    }
    if (spec.anomaly == AnomalyKind::shape && spec.anomaly_len < 2) {
      throw ParameterError("shape anomaly length must be >= 2");
    }
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> step(-1.0, 1.0);

  TimeSeries series;
  series.values.resize(spec.length);
  double level = 0.0;
  for (std::size_t i = 0; i < spec.length; ++i) {
    level += step(rng);
    series.values[i] = level;
  }

  if (spec.anomaly == AnomalyKind::spike) {
    // One-point jump far outside the walk's per-window variation.
    series.values[spec.anomaly_pos - 1] += 100.0;
  } else if (spec.anomaly == AnomalyKind::shape) {
    // The walk is smooth at lag 1; a fast large oscillation is not.
    const std::size_t start = spec.anomaly_pos - 1;
    const double base = series.values[start];
    for (std::size_t t = 0; t < spec.anomaly_len; ++t) {
      const double phase = 6.0 * M_PI * static_cast<double>(t) /
                           static_cast<double>(spec.anomaly_len - 1);
      series.values[start + t] = base + 12.0 * std::sin(phase);
    }
  }
  return series;
}

}  // namespace tsdd
