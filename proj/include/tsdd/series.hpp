#ifndef TSDD_SERIES_HPP
#define TSDD_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace tsdd {

// A time series: chronologically ordered real samples.
struct TimeSeries {
  std::vector<double> values;

  std::size_t length() const { return values.size(); }
};

// Throws ValidationError naming the first non-finite index; empty series is
// also rejected.
void validate_series(const TimeSeries& series);

// Rescales to mean 0, stddev 1 using the population variance
// sigma^2 = (1/m) * sum(t_i^2) - mu^2. A series whose stddev falls below
// kEpsilonSigma is mapped to all zeros: constant inputs carry no shape.
inline constexpr double kEpsilonSigma = 1e-12;

TimeSeries z_normalize(const TimeSeries& series);

// In-place variant over a raw range; used per matrix row.
void z_normalize_range(double* data, std::size_t n);

// Row-major matrix of all length-n subsequences, each z-normalized
// independently and zero-padded on the right so the row stride is a
// multiple of vec_width. Immutable after construction; safe to share
// across threads.
class SubsequenceMatrix {
 public:
  // Requires 1 <= n <= series length and vec_width >= 1. Throws
  // ParameterError otherwise.
  static SubsequenceMatrix build(const TimeSeries& series, std::size_t n,
                                 std::size_t vec_width = 8);

  std::size_t rows() const { return rows_; }           // N = m - n + 1
  std::size_t subsequence_length() const { return n_; }
  std::size_t stride() const { return stride_; }        // n + pad
  std::size_t pad() const { return stride_ - n_; }
  std::size_t vec_width() const { return vec_width_; }

  // Full padded row (stride elements). Rows are 0-indexed here; positions
  // reported to users are 1-based.
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * stride_, stride_};
  }
  const double* row_ptr(std::size_t i) const { return data_.data() + i * stride_; }

 private:
  SubsequenceMatrix() = default;

  std::vector<double> data_;
  std::size_t rows_ = 0;
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::size_t vec_width_ = 1;
};

// Abandon threshold plus instrumentation for one scan. `calls` counts
// distance evaluations started; `abandoned` the subset cut short.
struct DistanceBudget {
  double best_so_far_sq = std::numeric_limits<double>::infinity();
  std::uint64_t calls = 0;
  std::uint64_t abandoned = 0;
};

namespace detail {

// One 8-element block of the squared-distance sum, combined in a fixed
// pairwise tree. Every distance in the project goes through this order,
// so the abandoning and full variants agree bit for bit.
inline double block8_sq(const double* a, const double* b) {
  const double d0 = a[0] - b[0];
  const double d1 = a[1] - b[1];
  const double d2 = a[2] - b[2];
  const double d3 = a[3] - b[3];
  const double d4 = a[4] - b[4];
  const double d5 = a[5] - b[5];
  const double d6 = a[6] - b[6];
  const double d7 = a[7] - b[7];
  const double s01 = d0 * d0 + d1 * d1;
  const double s23 = d2 * d2 + d3 * d3;
  const double s45 = d4 * d4 + d5 * d5;
  const double s67 = d6 * d6 + d7 * d7;
  return (s01 + s23) + (s45 + s67);
}

// Short trailing block, summed as if zero-extended to 8 elements. The
// grouping matches block8_sq exactly, so a row and its zero-padded copy
// produce bit-identical sums.
inline double tail_sq(const double* a, const double* b, std::size_t len) {
  double d[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < len; ++i) d[i] = a[i] - b[i];
  const double s01 = d[0] * d[0] + d[1] * d[1];
  const double s23 = d[2] * d[2] + d[3] * d[3];
  const double s45 = d[4] * d[4] + d[5] * d[5];
  const double s67 = d[6] * d[6] + d[7] * d[7];
  return (s01 + s23) + (s45 + s67);
}

}  // namespace detail

// Squared Euclidean distance over two equal-length rows. Partial sums are
// checked against budget.best_so_far_sq at block boundaries (every `block`
// elements, at least 8); nullopt means the true distance is strictly
// greater than the threshold. Padding columns are zero in both rows and
// contribute nothing.
inline std::optional<double> squared_distance_early_abandon(
    std::span<const double> row_a, std::span<const double> row_b,
    DistanceBudget& budget, std::size_t block = 8) {
  ++budget.calls;
  const std::size_t len = row_a.size();
  const double threshold = budget.best_so_far_sq;
  const std::size_t check_every = block < 8 ? 8 : block;
  double sum = 0.0;
  std::size_t i = 0;
  std::size_t since_check = 0;
  for (; i + 8 <= len; i += 8) {
    sum += detail::block8_sq(row_a.data() + i, row_b.data() + i);
    since_check += 8;
    if (since_check >= check_every) {
      since_check = 0;
      if (sum > threshold) {
        ++budget.abandoned;
        return std::nullopt;
      }
    }
  }
  if (i < len) {
    sum += detail::tail_sq(row_a.data() + i, row_b.data() + i, len - i);
  }
  if (sum > threshold) {
    ++budget.abandoned;
    return std::nullopt;
  }
  return sum;
}

// Full squared distance, no abandoning. Same summation order as the
// abandoning variant, so both agree bit for bit on completed sums.
inline double squared_distance(std::span<const double> row_a,
                               std::span<const double> row_b,
                               DistanceBudget& budget) {
  ++budget.calls;
  const std::size_t len = row_a.size();
  double sum = 0.0;
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    sum += detail::block8_sq(row_a.data() + i, row_b.data() + i);
  }
  if (i < len) {
    sum += detail::tail_sq(row_a.data() + i, row_b.data() + i, len - i);
  }
  return sum;
}

}  // namespace tsdd

#endif  // TSDD_SERIES_HPP
