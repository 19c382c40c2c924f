#pragma once

#include "treq/rng.hpp"
#include "treq/word.hpp"

namespace treq {

inline Letter random_letter(int rank, Rng& rng) {
  return Letter::from_code(static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * rank))));
}

// Random reduced word of exactly the requested length (no cancellation can
// occur because each letter avoids the inverse of its predecessor).
inline Word random_word(int rank, std::size_t len, Rng& rng) {
  std::vector<Letter> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    Letter l = random_letter(rank, rng);
    while (!out.empty() && l == out.back().inverse()) l = random_letter(rank, rng);
    out.push_back(l);
  }
  return Word(rank, out);
}

// Random cyclically reduced word of exactly the requested length (>= 1).
inline Word random_cyclically_reduced_word(int rank, std::size_t len, Rng& rng) {
  for (;;) {
    Word w = random_word(rank, len, rng);
    if (w.length() < 2 || w[0] != w[w.length() - 1].inverse()) return w;
  }
}

}  // namespace treq
