#ifndef TSDD_SAX_HPP
#define TSDD_SAX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tsdd/series.hpp"

namespace tsdd {

// Symbols are the integers 1..cardinality. The breakpoints split N(0,1)
// into cardinality equiprobable bins; beta_0 = -inf and beta_card = +inf
// are implicit, only the finite thresholds are stored.
class Alphabet {
 public:
  // Built-in tables cover cardinalities 2..10 (see tools/gen_breakpoints.py).
  explicit Alphabet(std::size_t cardinality);

  std::size_t cardinality() const { return cardinality_; }
  std::span<const double> breakpoints() const { return breakpoints_; }

  // Symbol j such that beta_{j-1} <= value < beta_j (lower-inclusive bins).
  std::uint32_t symbol_for(double value) const;

 private:
  std::size_t cardinality_;
  std::vector<double> breakpoints_;
};

struct PaaMatrix {
  std::vector<double> data;  // row-major, rows x word_len
  std::size_t rows = 0;
  std::size_t word_len = 0;

  std::span<const double> row(std::size_t i) const {
    return {data.data() + i * word_len, word_len};
  }
};

struct SaxMatrix {
  std::vector<std::uint32_t> data;  // row-major, rows x word_len, entries 1..|A|
  std::size_t rows = 0;
  std::size_t word_len = 0;

  std::span<const std::uint32_t> row(std::size_t i) const {
    return {data.data() + i * word_len, word_len};
  }
};

// All |A|^word_len words in lexicographic order; row h-1 is the unique
// word with hash h.
struct WordMatrix {
  std::vector<std::uint32_t> data;
  std::size_t rows = 0;  // dict_size = |A|^word_len
  std::size_t word_len = 0;

  std::span<const std::uint32_t> row(std::size_t i) const {
    return {data.data() + i * word_len, word_len};
  }
};

// Piecewise aggregate approximation over the first n columns of each row
// (padding excluded). For n not divisible by word_len, an element is split
// across adjacent segments in proportion to its overlap with the segment
// boundaries, which keeps segment means exact for any n.
PaaMatrix paa(const SubsequenceMatrix& matrix, std::size_t word_len);

// Single-row PAA; `out` receives word_len segment means of `values`.
void paa_row(std::span<const double> values, std::span<double> out);

// Symbolizes every PAA coordinate against the alphabet breakpoints.
SaxMatrix sax(const PaaMatrix& paa_matrix, const Alphabet& alphabet);

// Base-|A| positional encoding: h(a_1..a_w) = 1 + sum (a_j - 1)*|A|^(w-j).
// A bijection onto 1..|A|^w, monotone in lexicographic word order.
std::uint64_t word_hash(std::span<const std::uint32_t> word, const Alphabet& alphabet);

inline constexpr std::uint64_t kMaxDictSize = std::uint64_t{1} << 24;

std::uint64_t dict_size(const Alphabet& alphabet, std::size_t word_len);

WordMatrix build_word_matrix(const Alphabet& alphabet, std::size_t word_len);

}  // namespace tsdd

#endif  // TSDD_SAX_HPP
