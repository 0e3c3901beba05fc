#include "tsdd/discovery.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tsdd/errors.hpp"

namespace tsdd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline std::size_t abs_diff(std::size_t a, std::size_t b) {
  return a > b ? a - b : b - a;
}

void check_options(const DiscoveryOptions& options) {
  if (options.threads < 1) {
    throw ParameterError("threads must be >= 1, got " + std::to_string(options.threads));
  }
  if (options.chunk < 1) {
    throw ParameterError("chunk must be >= 1, got " + std::to_string(options.chunk));
  }
}

struct ScanOutcome {
  double min_sq = kInf;   // exact nearest-neighbor squared distance when not discarded
  bool discarded = false;  // a neighbor closer than the best-so-far was found
};

// Bucket-then-rest neighbor scan for one position. The abandon threshold is
// the running minimum: an abandoned pair is strictly above it and can affect
// neither the minimum nor the discard check, so min_sq stays exact. The
// running minimum never falls below the best-so-far (the discard check runs
// first), which keeps the discard test exact as well.
template <typename BsfFn>
ScanOutcome scan_position(const SubsequenceMatrix& matrix, const DiscordIndexes& indexes,
                          std::size_t i, BsfFn current_bsf_sq, DistanceBudget& budget,
                          bool pruning) {
  const std::size_t n = matrix.subsequence_length();
  const std::size_t rows = matrix.rows();
  const std::uint64_t hash_i = indexes.hashes[i];
  const auto row_i = matrix.row(i);

  ScanOutcome out;
  for (const std::size_t pos_j : indexes.words.bucket(hash_i)) {
    const std::size_t j = pos_j - 1;
    if (abs_diff(i, j) < n) continue;
    assert(abs_diff(i, j) >= n);
    budget.best_so_far_sq = pruning ? out.min_sq : kInf;
    const auto d = squared_distance_early_abandon(row_i, matrix.row(j), budget);
    if (!d) continue;
    if (pruning && *d < current_bsf_sq()) {
      out.discarded = true;
      return out;
    }
    if (*d < out.min_sq) out.min_sq = *d;
  }
  for (std::size_t j = 0; j < rows; ++j) {
    if (indexes.hashes[j] == hash_i || abs_diff(i, j) < n) continue;
    assert(abs_diff(i, j) >= n);
    budget.best_so_far_sq = pruning ? out.min_sq : kInf;
    const auto d = squared_distance_early_abandon(row_i, matrix.row(j), budget);
    if (!d) continue;
    if (pruning && *d < current_bsf_sq()) {
      out.discarded = true;
      return out;
    }
    if (*d < out.min_sq) out.min_sq = *d;
  }
  return out;
}

std::vector<char> candidate_mask(const DiscordIndexes& indexes, std::size_t rows) {
  std::vector<char> mask(rows, 0);
  for (const std::size_t p : indexes.candidates.positions) mask[p - 1] = 1;
  return mask;
}

// Nothing ever beat the initial best-so-far of zero: every reachable
// nearest-neighbor distance is exactly zero, and position 1 always has a
// non-self match on feasible input.
DiscordResult finalize(double best_sq, std::size_t best_pos, Engine engine) {
  DiscordResult result;
  if (best_pos == 0) {
    best_pos = 1;
    best_sq = 0.0;
  }
  result.position = best_pos;
  result.distance = std::sqrt(best_sq);
  result.engine = engine;
  return result;
}

}  // namespace

std::string_view engine_name(Engine engine) {
  switch (engine) {
    case Engine::brute:
      return "brute";
    case Engine::hotsax:
      return "hotsax";
    case Engine::phidd:
      return "phidd";
  }
  return "unknown";
}

void require_feasible(const SubsequenceMatrix& matrix) {
  const std::size_t n = matrix.subsequence_length();
  if (matrix.rows() < n + 1) {
    throw InfeasibleInputError("no subsequence has a non-self match: N=" +
                               std::to_string(matrix.rows()) + " <= n=" +
                               std::to_string(n) + " (need series length m >= 2n)");
  }
}

DiscordResult brute_force_discord(const SubsequenceMatrix& matrix,
                                  const DiscoveryOptions& options) {
  check_options(options);
  require_feasible(matrix);
  const std::size_t rows = matrix.rows();
  const std::size_t n = matrix.subsequence_length();

  std::vector<double> nn(rows, kInf);
  std::uint64_t calls = 0;

  // Tile the outer positions so each streamed neighbor row is reused
  // against a cache-resident strip.
  constexpr std::size_t kTile = 128;
  const std::ptrdiff_t tiles =
      static_cast<std::ptrdiff_t>((rows + kTile - 1) / kTile);

#pragma omp parallel for schedule(dynamic) num_threads(options.threads) \
    reduction(+ : calls)
  for (std::ptrdiff_t t = 0; t < tiles; ++t) {
    const std::size_t i0 = static_cast<std::size_t>(t) * kTile;
    const std::size_t i1 = std::min(i0 + kTile, rows);
    DistanceBudget budget;
    for (std::size_t j = 0; j < rows; ++j) {
      const auto row_j = matrix.row(j);
      for (std::size_t i = i0; i < i1; ++i) {
        if (abs_diff(i, j) < n) continue;
        assert(abs_diff(i, j) >= n);
        const double d = squared_distance(matrix.row(i), row_j, budget);
        if (d < nn[i]) nn[i] = d;
      }
    }
    calls += budget.calls;
  }

  double best_sq = -1.0;
  std::size_t best_pos = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (nn[i] == kInf) continue;  // no non-self match; excluded from candidacy
    if (nn[i] > best_sq) {
      best_sq = nn[i];
      best_pos = i + 1;
    }
  }

  DiscordResult result;
  result.position = best_pos;
  result.distance = std::sqrt(best_sq);
  result.calls = calls;
  result.engine = Engine::brute;
  return result;
}

DiscordResult hotsax_discord(const SubsequenceMatrix& matrix,
                             const DiscordIndexes& indexes,
                             const DiscoveryOptions& options) {
  check_options(options);
  require_feasible(matrix);
  const std::size_t rows = matrix.rows();
  const bool pruning = !options.disable_pruning;
  const auto is_candidate = candidate_mask(indexes, rows);

  DistanceBudget budget;
  double bsf_sq = 0.0;
  std::size_t bsf_pos = 0;

  const auto visit = [&](std::size_t i) {
    const auto outcome =
        scan_position(matrix, indexes, i, [&] { return bsf_sq; }, budget, pruning);
    if (outcome.discarded || outcome.min_sq == kInf) return;
    if (outcome.min_sq > bsf_sq) {
      bsf_sq = outcome.min_sq;
      bsf_pos = i + 1;
    }
  };

  for (const std::size_t p : indexes.candidates.positions) visit(p - 1);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!is_candidate[i]) visit(i);
  }

  DiscordResult result = finalize(bsf_sq, bsf_pos, Engine::hotsax);
  result.calls = budget.calls;
  result.abandoned = budget.abandoned;
  return result;
}

StageCounters potential_discord_stage(const SubsequenceMatrix& matrix,
                                      const DiscordIndexes& indexes, SharedBest& shared,
                                      const DiscoveryOptions& options) {
  check_options(options);
  const std::size_t rows = matrix.rows();
  const std::size_t n = matrix.subsequence_length();
  const bool pruning = !options.disable_pruning;
  const int chunk = options.chunk;
  StageCounters totals;

  for (const std::size_t p : indexes.candidates.positions) {
    const std::size_t i = p - 1;
    const std::uint64_t hash_i = indexes.hashes[i];
    const auto row_i = matrix.row(i);

    // Same-word bucket, sequential; a close neighbor discards the candidate
    // before the parallel sweep starts.
    double bucket_min = kInf;
    bool discarded = false;
    DistanceBudget bucket_budget;
    for (const std::size_t pos_j : indexes.words.bucket(hash_i)) {
      const std::size_t j = pos_j - 1;
      if (abs_diff(i, j) < n) continue;
      assert(abs_diff(i, j) >= n);
      bucket_budget.best_so_far_sq = pruning ? bucket_min : kInf;
      const auto d = squared_distance_early_abandon(row_i, matrix.row(j), bucket_budget);
      if (!d) continue;
      if (pruning && *d < shared.load_sq()) {
        discarded = true;
        break;
      }
      if (*d < bucket_min) bucket_min = *d;
    }
    totals.calls += bucket_budget.calls;
    totals.abandoned += bucket_budget.abandoned;
    if (discarded) continue;

    // Other-word positions, dynamically scheduled. A literal break is not
    // available here; a shared flag stops the remaining iterations and the
    // candidate is discarded after the region.
    std::atomic<bool> abort{false};
    double stage_min = bucket_min;
    std::uint64_t calls = 0;
    std::uint64_t abandoned = 0;

#pragma omp parallel num_threads(options.threads)
    {
      DistanceBudget local;
      double local_min = bucket_min;
#pragma omp for schedule(dynamic, chunk) nowait
      for (std::ptrdiff_t jj = 0; jj < static_cast<std::ptrdiff_t>(rows); ++jj) {
        if (pruning && abort.load(std::memory_order_relaxed)) continue;
        const std::size_t j = static_cast<std::size_t>(jj);
        if (indexes.hashes[j] == hash_i || abs_diff(i, j) < n) continue;
        assert(abs_diff(i, j) >= n);
        local.best_so_far_sq = pruning ? local_min : kInf;
        const auto d = squared_distance_early_abandon(row_i, matrix.row(j), local);
        if (!d) continue;
        if (pruning && *d < shared.load_sq()) {
          abort.store(true, std::memory_order_relaxed);
          continue;
        }
        if (*d < local_min) local_min = *d;
      }
#pragma omp critical(tsdd_stage1_merge)
      {
        if (local_min < stage_min) stage_min = local_min;
        calls += local.calls;
        abandoned += local.abandoned;
      }
    }
    totals.calls += calls;
    totals.abandoned += abandoned;

    if (abort.load(std::memory_order_relaxed)) continue;
    if (stage_min < kInf) shared.try_raise(stage_min, p);
  }
  return totals;
}

DiscordResult refine_discord_stage(const SubsequenceMatrix& matrix,
                                   const DiscordIndexes& indexes, SharedBest& shared,
                                   const DiscoveryOptions& options) {
  check_options(options);
  const std::size_t rows = matrix.rows();
  const bool pruning = !options.disable_pruning;
  const int chunk = options.chunk;

  // Stage one's winner; stage two overwrites it only on strict improvement.
  const auto [stage1_sq, stage1_pos] = shared.snapshot();

  const auto is_candidate = candidate_mask(indexes, rows);
  std::vector<std::size_t> noncand;
  noncand.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!is_candidate[i]) noncand.push_back(i);
  }

  // Stage winner is reduced from per-thread partials with a fixed rule
  // (greater distance, then smaller position), so the result does not
  // depend on thread count or scheduling.
  double stage2_sq = -1.0;
  std::size_t stage2_pos = 0;
  std::uint64_t calls = 0;
  std::uint64_t abandoned = 0;

#pragma omp parallel num_threads(options.threads)
  {
    DistanceBudget local;
    double best_sq_local = -1.0;
    std::size_t best_pos_local = 0;
#pragma omp for schedule(dynamic, chunk) nowait
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(noncand.size());
         ++idx) {
      const std::size_t i = noncand[static_cast<std::size_t>(idx)];
      const auto outcome = scan_position(
          matrix, indexes, i, [&] { return shared.load_sq(); }, local, pruning);
      if (outcome.discarded || outcome.min_sq == kInf) continue;
      if (pruning) shared.try_raise(outcome.min_sq, i + 1);  // strengthens later pruning
      if (outcome.min_sq > best_sq_local ||
          (outcome.min_sq == best_sq_local && i + 1 < best_pos_local)) {
        best_sq_local = outcome.min_sq;
        best_pos_local = i + 1;
      }
    }
#pragma omp critical(tsdd_stage2_merge)
    {
      if (best_pos_local != 0 &&
          (best_sq_local > stage2_sq ||
           (best_sq_local == stage2_sq && best_pos_local < stage2_pos))) {
        stage2_sq = best_sq_local;
        stage2_pos = best_pos_local;
      }
      calls += local.calls;
      abandoned += local.abandoned;
    }
  }

  double final_sq = stage1_sq;
  std::size_t final_pos = stage1_pos;
  if (stage2_pos != 0 && stage2_sq > final_sq) {
    final_sq = stage2_sq;
    final_pos = stage2_pos;
  }

  DiscordResult result = finalize(final_sq, final_pos, Engine::phidd);
  result.calls = calls;
  result.abandoned = abandoned;
  return result;
}

DiscordResult phidd_discord(const SubsequenceMatrix& matrix,
                            const DiscordIndexes& indexes,
                            const DiscoveryOptions& options) {
  check_options(options);
  require_feasible(matrix);

  SharedBest shared;
  const StageCounters stage1 = potential_discord_stage(matrix, indexes, shared, options);
  DiscordResult result = refine_discord_stage(matrix, indexes, shared, options);
  result.calls += stage1.calls;
  result.abandoned += stage1.abandoned;
  result.engine = Engine::phidd;
  return result;
}

}  // namespace tsdd
