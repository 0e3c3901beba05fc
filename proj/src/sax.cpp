#include "tsdd/sax.hpp"

#include <algorithm>
#include <string>

#include "tsdd/errors.hpp"

namespace tsdd {

namespace {

// Equiprobable N(0,1) breakpoints, symmetrized. Regenerate with
// tools/gen_breakpoints.py.
std::vector<double> builtin_breakpoints(std::size_t cardinality) {
  switch (cardinality) {
    case 2:
      return {0};
    case 3:
      return {-0.43072729929545756, 0.43072729929545756};
    case 4:
      return {-0.67448975019608171, 0, 0.67448975019608171};
    case 5:
      return {-0.84162123357291418, -0.25334710313579972, 0.25334710313579972,
              0.84162123357291418};
    case 6:
      return {-0.96742156610170105, -0.43072729929545756, 0, 0.43072729929545756,
              0.96742156610170105};
    case 7:
      return {-1.0675705238781414, -0.56594882193286311, -0.1800123697927051,
              0.1800123697927051, 0.56594882193286311, 1.0675705238781414};
    case 8:
      return {-1.1503493803760079, -0.67448975019608171, -0.31863936396437514, 0,
              0.31863936396437514, 0.67448975019608171, 1.1503493803760079};
    case 9:
      return {-1.2206403488473501, -0.7647096737863871, -0.43072729929545756,
              -0.13971029888186212, 0.13971029888186212, 0.43072729929545756,
              0.7647096737863871, 1.2206403488473501};
    case 10:
      return {-1.2815515655446004, -0.84162123357291418, -0.52440051270804089,
              -0.25334710313579972, 0, 0.25334710313579972, 0.52440051270804089,
              0.84162123357291418, 1.2815515655446004};
    default:
      throw ParameterError("alphabet cardinality " + std::to_string(cardinality) +
                           " is outside the built-in range 2..10");
  }
}

}  // namespace

Alphabet::Alphabet(std::size_t cardinality)
    : cardinality_(cardinality), breakpoints_(builtin_breakpoints(cardinality)) {}

std::uint32_t Alphabet::symbol_for(double value) const {
  // first breakpoint strictly greater than value; bins are lower-inclusive
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), value);
  return static_cast<std::uint32_t>(it - breakpoints_.begin()) + 1;
}

// Integer segment boundaries on a grid of n*word_len units: element t
// covers [t*word_len, (t+1)*word_len), segment k covers [k*n, (k+1)*n).
// Each segment holds exactly n units, so the weighted sum divided by n is
// the segment mean. Reduces to plain means when word_len divides n.
void paa_row(std::span<const double> values, std::span<double> out) {
  const std::size_t n = values.size();
  const std::size_t w = out.size();
  for (std::size_t k = 0; k < w; ++k) {
    const std::size_t seg_lo = k * n;
    const std::size_t seg_hi = (k + 1) * n;
    const std::size_t t_first = seg_lo / w;
    const std::size_t t_last = (seg_hi - 1) / w;  // inclusive
    double acc = 0.0;
    for (std::size_t t = t_first; t <= t_last; ++t) {
      const std::size_t el_lo = t * w;
      const std::size_t el_hi = el_lo + w;
      const std::size_t units = std::min(el_hi, seg_hi) - std::max(el_lo, seg_lo);
      acc += static_cast<double>(units) * values[t];
    }
    out[k] = acc / static_cast<double>(n);
  }
}

PaaMatrix paa(const SubsequenceMatrix& matrix, std::size_t word_len) {
  const std::size_t n = matrix.subsequence_length();
  if (word_len < 1 || word_len > n) {
    throw ParameterError("word_len=" + std::to_string(word_len) +
                         " must satisfy 1 <= word_len <= n=" + std::to_string(n));
  }

  PaaMatrix out;
  out.rows = matrix.rows();
  out.word_len = word_len;
  out.data.assign(out.rows * word_len, 0.0);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ri = 0; ri < static_cast<std::ptrdiff_t>(out.rows); ++ri) {
    const std::size_t i = static_cast<std::size_t>(ri);
    paa_row(std::span<const double>(matrix.row_ptr(i), n),
            std::span<double>(out.data.data() + i * word_len, word_len));
  }
  return out;
}

SaxMatrix sax(const PaaMatrix& paa_matrix, const Alphabet& alphabet) {
  SaxMatrix out;
  out.rows = paa_matrix.rows;
  out.word_len = paa_matrix.word_len;
  out.data.assign(out.rows * out.word_len, 0);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ri = 0; ri < static_cast<std::ptrdiff_t>(out.rows); ++ri) {
    const std::size_t i = static_cast<std::size_t>(ri);
    const double* src = paa_matrix.data.data() + i * paa_matrix.word_len;
    std::uint32_t* dst = out.data.data() + i * out.word_len;
    for (std::size_t k = 0; k < out.word_len; ++k) {
      dst[k] = alphabet.symbol_for(src[k]);
    }
  }
  return out;
}

std::uint64_t word_hash(std::span<const std::uint32_t> word, const Alphabet& alphabet) {
  const std::uint64_t card = alphabet.cardinality();
  std::uint64_t h = 0;
  for (const std::uint32_t symbol : word) {
    if (symbol < 1 || symbol > card) {
      throw ParameterError("symbol " + std::to_string(symbol) +
                           " is outside alphabet range 1.." + std::to_string(card));
    }
    h = h * card + (symbol - 1);
  }
  return h + 1;
}

std::uint64_t dict_size(const Alphabet& alphabet, std::size_t word_len) {
  std::uint64_t size = 1;
  for (std::size_t j = 0; j < word_len; ++j) {
    size *= alphabet.cardinality();
    if (size > kMaxDictSize) {
      throw ParameterError("dictionary of |A|^word_len = " +
                           std::to_string(alphabet.cardinality()) + "^" +
                           std::to_string(word_len) + " words exceeds the 2^24 guard");
    }
  }
  return size;
}

WordMatrix build_word_matrix(const Alphabet& alphabet, std::size_t word_len) {
  if (word_len < 1) {
    throw ParameterError("word_len must be >= 1");
  }
  const std::uint64_t size = dict_size(alphabet, word_len);
  const std::uint32_t card = static_cast<std::uint32_t>(alphabet.cardinality());

  WordMatrix out;
  out.rows = size;
  out.word_len = word_len;
  out.data.assign(out.rows * word_len, 1);

  // Counting in base |A|: row h-1 spells the word with hash h.
  for (std::size_t r = 1; r < out.rows; ++r) {
    const std::uint32_t* prev = out.data.data() + (r - 1) * word_len;
    std::uint32_t* cur = out.data.data() + r * word_len;
    std::copy(prev, prev + word_len, cur);
    for (std::size_t j = word_len; j-- > 0;) {
      if (cur[j] < card) {
        ++cur[j];
        break;
      }
      cur[j] = 1;
    }
  }
  return out;
}

}  // namespace tsdd
