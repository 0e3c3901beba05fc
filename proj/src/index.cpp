#include "tsdd/index.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tsdd {

std::vector<std::uint64_t> word_hashes(const SaxMatrix& sax_matrix,
                                       const Alphabet& alphabet) {
  std::vector<std::uint64_t> hashes(sax_matrix.rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ri = 0; ri < static_cast<std::ptrdiff_t>(sax_matrix.rows); ++ri) {
    const std::size_t i = static_cast<std::size_t>(ri);
    hashes[i] = word_hash(sax_matrix.row(i), alphabet);
  }
  return hashes;
}

namespace {

// Histogram of word hashes. Per-thread partials merged once, so the result
// is identical for any thread count.
std::vector<std::uint32_t> hash_histogram(const std::vector<std::uint64_t>& hashes,
                                          std::uint64_t dict) {
  std::vector<std::uint32_t> hist(dict, 0);
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<std::uint32_t> local(dict, 0);
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(hashes.size()); ++i) {
      ++local[hashes[static_cast<std::size_t>(i)] - 1];
    }
#pragma omp critical(tsdd_hist_merge)
    {
      for (std::uint64_t h = 0; h < dict; ++h) hist[h] += local[h];
    }
  }
#else
  for (const std::uint64_t h : hashes) ++hist[h - 1];
#endif
  return hist;
}

}  // namespace

FrequencyIndex build_frequency_index(const SaxMatrix& sax_matrix,
                                     const Alphabet& alphabet) {
  const std::uint64_t dict = dict_size(alphabet, sax_matrix.word_len);
  const auto hashes = word_hashes(sax_matrix, alphabet);
  const auto hist = hash_histogram(hashes, dict);

  FrequencyIndex out;
  out.freq.resize(hashes.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(hashes.size()); ++i) {
    out.freq[static_cast<std::size_t>(i)] = hist[hashes[static_cast<std::size_t>(i)] - 1];
  }
  return out;
}

CandidateIndex build_candidate_index(const FrequencyIndex& freq_index) {
  const auto& freq = freq_index.freq;
  std::uint32_t min_freq = std::numeric_limits<std::uint32_t>::max();
#pragma omp parallel for schedule(static) reduction(min : min_freq)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(freq.size()); ++i) {
    min_freq = std::min(min_freq, freq[static_cast<std::size_t>(i)]);
  }

  CandidateIndex out;
  for (std::size_t i = 0; i < freq.size(); ++i) {
    if (freq[i] == min_freq) out.positions.push_back(i + 1);
  }
  return out;
}

WordIndex build_word_index(const SaxMatrix& sax_matrix, const Alphabet& alphabet) {
  const std::uint64_t dict = dict_size(alphabet, sax_matrix.word_len);
  const auto hashes = word_hashes(sax_matrix, alphabet);
  const auto hist = hash_histogram(hashes, dict);

  WordIndex out;
  out.offsets_.assign(dict + 1, 0);
  for (std::uint64_t h = 0; h < dict; ++h) {
    out.offsets_[h + 1] = out.offsets_[h] + hist[h];
  }

  // Counting sort by hash keeps every bucket ascending by position.
  out.positions_.resize(hashes.size());
  std::vector<std::size_t> cursor(out.offsets_.begin(), out.offsets_.end() - 1);
  for (std::size_t i = 0; i < hashes.size(); ++i) {
    out.positions_[cursor[hashes[i] - 1]++] = i + 1;
  }
  return out;
}

DiscordIndexes DiscordIndexes::build(const SaxMatrix& sax_matrix,
                                     const Alphabet& alphabet) {
  DiscordIndexes out;
  out.hashes = word_hashes(sax_matrix, alphabet);
  out.freq = build_frequency_index(sax_matrix, alphabet);
  out.candidates = build_candidate_index(out.freq);
  out.words = build_word_index(sax_matrix, alphabet);
  return out;
}

}  // namespace tsdd
