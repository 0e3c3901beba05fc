#ifndef TSDD_INDEX_HPP
#define TSDD_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tsdd/sax.hpp"

namespace tsdd {

// freq[i] = number of SAX rows equal to row i (including i itself).
struct FrequencyIndex {
  std::vector<std::uint32_t> freq;
};

// Positions (1-based) whose word frequency equals the global minimum,
// ascending.
struct CandidateIndex {
  std::vector<std::size_t> positions;
};

// Inverted index: bucket h-1 lists, ascending, the 1-based positions whose
// SAX word hashes to h. Stored as offsets into a flat position array so
// the dictionary stays compact even when most words never occur.
class WordIndex {
 public:
  std::span<const std::size_t> bucket(std::uint64_t hash) const {
    return {positions_.data() + offsets_[hash - 1],
            offsets_[hash] - offsets_[hash - 1]};
  }
  std::uint64_t bucket_count() const { return offsets_.size() - 1; }
  std::size_t total_positions() const { return positions_.size(); }

 private:
  friend WordIndex build_word_index(const SaxMatrix&, const Alphabet&);

  std::vector<std::size_t> offsets_;    // dict_size + 1
  std::vector<std::size_t> positions_;  // N entries
};

// Hash of every SAX row, in row order. Shared by the index builders and
// the discovery engines (bucket lookup and same-word tests).
std::vector<std::uint64_t> word_hashes(const SaxMatrix& sax_matrix,
                                       const Alphabet& alphabet);

FrequencyIndex build_frequency_index(const SaxMatrix& sax_matrix,
                                     const Alphabet& alphabet);

CandidateIndex build_candidate_index(const FrequencyIndex& freq_index);

WordIndex build_word_index(const SaxMatrix& sax_matrix, const Alphabet& alphabet);

// The three indexes plus the per-position hashes, built in one pass over
// the SAX matrix.
struct DiscordIndexes {
  FrequencyIndex freq;
  CandidateIndex candidates;
  WordIndex words;
  std::vector<std::uint64_t> hashes;

  static DiscordIndexes build(const SaxMatrix& sax_matrix, const Alphabet& alphabet);
};

}  // namespace tsdd

#endif  // TSDD_INDEX_HPP
