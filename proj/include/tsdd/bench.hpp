#ifndef TSDD_BENCH_HPP
#define TSDD_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "tsdd/pipeline.hpp"
#include "tsdd/series.hpp"

namespace tsdd {

struct BenchConfig {
  std::vector<std::size_t> n_values;
  std::vector<int> thread_counts;  // must contain 1: it is the speedup baseline
  int repeats = 3;
  std::size_t word_len = 4;
  std::size_t alphabet = 4;
  std::size_t vec_width = 8;
  int chunk = 1;
  Engine engine = Engine::phidd;
};

struct BenchRow {
  Engine engine = Engine::phidd;
  std::size_t m = 0;
  std::size_t n = 0;
  int threads = 1;
  double wall_time_s = 0.0;  // median over repeats of prep + search
  std::uint64_t calls = 0;
  std::size_t pos = 0;
  double dist = 0.0;
  double speedup = 1.0;      // s(k) = t1 / tk per (n) cell
  double efficiency = 1.0;   // e(k) = s(k) / k
};

// Runs every n x threads cell `repeats` times on the same series and keeps
// the median wall time. IO and report emission are not timed.
std::vector<BenchRow> run_bench(const TimeSeries& series, const BenchConfig& config);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace tsdd

#endif  // TSDD_BENCH_HPP
