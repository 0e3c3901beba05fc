#ifndef TSDD_DISCOVERY_HPP
#define TSDD_DISCOVERY_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <string_view>
#include <utility>

#include "tsdd/index.hpp"
#include "tsdd/series.hpp"

namespace tsdd {

enum class Engine { brute, hotsax, phidd };

std::string_view engine_name(Engine engine);

struct DiscordResult {
  std::size_t position = 0;   // 1-based start of the discord subsequence
  double distance = 0.0;      // Euclidean nearest-neighbor distance (sqrt once, at the end)
  std::uint64_t calls = 0;    // distance evaluations started
  std::uint64_t abandoned = 0;  // of which cut short
  Engine engine = Engine::brute;
};

struct DiscoveryOptions {
  int threads = 1;           // worker count for parallel engines
  int chunk = 1;             // dynamic-schedule chunk size
  bool disable_pruning = false;  // debug: no breaks, no abandoning; results must not change
};

// Shared squared best-so-far with paired position. Raises are strictly
// monotone; readers may see a stale (smaller) value, which prunes less but
// never more.
class SharedBest {
 public:
  double load_sq() const { return sq_mirror_.load(std::memory_order_relaxed); }

  // Strict monotone-max update of the (sq, pos) pair. Returns whether the
  // pair was raised.
  bool try_raise(double sq, std::size_t pos) {
    std::lock_guard<std::mutex> guard(mu_);
    if (sq > best_sq_) {
      best_sq_ = sq;
      best_pos_ = pos;
      sq_mirror_.store(sq, std::memory_order_release);
      return true;
    }
    return false;
  }

  std::pair<double, std::size_t> snapshot() const {
    std::lock_guard<std::mutex> guard(mu_);
    return {best_sq_, best_pos_};
  }

 private:
  std::atomic<double> sq_mirror_{0.0};
  mutable std::mutex mu_;
  double best_sq_ = 0.0;
  std::size_t best_pos_ = 0;
};

// Throws InfeasibleInputError unless some subsequence has a non-self match
// (N >= n + 1, i.e. m >= 2n).
void require_feasible(const SubsequenceMatrix& matrix);

// Exhaustive O(N^2) search: the oracle the pruning engines are checked
// against. Every ordered pair with |i - j| >= n is evaluated in full; ties
// on the maximal nearest-neighbor distance break to the smallest position.
DiscordResult brute_force_discord(const SubsequenceMatrix& matrix,
                                  const DiscoveryOptions& options = {});

// Sequential search in heuristic order: rarest-word candidates first, then
// the remaining positions ascending; neighbors from the same-word bucket
// first, then the rest ascending. A neighbor closer than the best-so-far
// discards the outer position.
DiscordResult hotsax_discord(const SubsequenceMatrix& matrix,
                             const DiscordIndexes& indexes,
                             const DiscoveryOptions& options = {});

// Two-stage parallel search over the same heuristic order. The result
// (position and distance) is independent of the thread count.
DiscordResult phidd_discord(const SubsequenceMatrix& matrix,
                            const DiscordIndexes& indexes,
                            const DiscoveryOptions& options = {});

struct StageCounters {
  std::uint64_t calls = 0;
  std::uint64_t abandoned = 0;
};

// Stage one: sequential loop over the candidate positions; for each, the
// same-word bucket is scanned sequentially and the remaining positions in
// a dynamically scheduled parallel loop. Leaves the stage winner in
// `shared`.
StageCounters potential_discord_stage(const SubsequenceMatrix& matrix,
                                      const DiscordIndexes& indexes, SharedBest& shared,
                                      const DiscoveryOptions& options = {});

// Stage two: dynamically scheduled parallel loop over the non-candidate
// positions, bucket-then-rest scan per position. Combines with the stage-one
// value already in `shared` (overwrites only on strict improvement) and
// returns the finished result with the square root applied.
DiscordResult refine_discord_stage(const SubsequenceMatrix& matrix,
                                   const DiscordIndexes& indexes, SharedBest& shared,
                                   const DiscoveryOptions& options = {});

inline std::uint64_t count_distance_calls(const DiscordResult& result) {
  return result.calls;
}

}  // namespace tsdd

#endif  // TSDD_DISCOVERY_HPP
