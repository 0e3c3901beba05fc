#include "tsdd/series.hpp"

#include <cmath>
#include <string>

#include "tsdd/errors.hpp"

namespace tsdd {

void validate_series(const TimeSeries& series) {
  if (series.values.empty()) {
    throw ValidationError("series is empty");
  }
  for (std::size_t i = 0; i < series.values.size(); ++i) {
    if (!std::isfinite(series.values[i])) {
      throw ValidationError("non-finite value at index " + std::to_string(i + 1));
    }
  }
}

void z_normalize_range(double* data, std::size_t n) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += data[i];
    sum_sq += data[i] * data[i];
  }
  const double mu = sum / static_cast<double>(n);
  const double var = sum_sq / static_cast<double>(n) - mu * mu;
  const double sigma = var > 0.0 ? std::sqrt(var) : 0.0;
  if (sigma < kEpsilonSigma) {
    for (std::size_t i = 0; i < n; ++i) data[i] = 0.0;
    return;
  }
  const double inv = 1.0 / sigma;
  for (std::size_t i = 0; i < n; ++i) data[i] = (data[i] - mu) * inv;
}

TimeSeries z_normalize(const TimeSeries& series) {
  validate_series(series);
  TimeSeries out = series;
  z_normalize_range(out.values.data(), out.values.size());
  return out;
}

SubsequenceMatrix SubsequenceMatrix::build(const TimeSeries& series, std::size_t n,
                                           std::size_t vec_width) {
  validate_series(series);
  const std::size_t m = series.length();
  if (n < 1 || n > m) {
    throw ParameterError("subsequence length n=" + std::to_string(n) +
                         " must satisfy 1 <= n <= m=" + std::to_string(m));
  }
  if (vec_width < 1) {
    throw ParameterError("vec_width must be >= 1");
  }

  SubsequenceMatrix mat;
  mat.n_ = n;
  mat.vec_width_ = vec_width;
  mat.rows_ = m - n + 1;
  const std::size_t pad = (vec_width - n % vec_width) % vec_width;
  mat.stride_ = n + pad;
  mat.data_.assign(mat.rows_ * mat.stride_, 0.0);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(mat.rows_); ++i) {
    double* row = mat.data_.data() + static_cast<std::size_t>(i) * mat.stride_;
    for (std::size_t j = 0; j < n; ++j) row[j] = series.values[i + j];
    z_normalize_range(row, n);
    // padding columns stay exactly zero
  }
  return mat;
}

}  // namespace tsdd
