#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "treq/word.hpp"

namespace treq {

// A nonempty cyclically reduced word stored in its canonical rotation (the
// rotation that is minimal in the letter order a < a^-1 < b < b^-1 < ...).
// Canonical rotations make cyclic words usable as conjugacy-class keys.
class CyclicWord {
 public:
  // Cyclically reduces and canonicalizes; throws DomainError on the trivial
  // word (there is no cyclic word of the identity).
  explicit CyclicWord(const Word& w);

  // Factors w = c * u * c^-1 with u cyclically reduced in canonical
  // rotation; returns (c, u).
  static std::pair<Word, CyclicWord> reduce(const Word& w);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter at_mod(std::size_t i) const { return letters_[i % letters_.size()]; }

  CyclicWord inverse() const;
  CyclicWord palindromic_reverse() const;

  // The canonical rotation as an ordinary (reduced) word.
  Word word() const { return Word(rank_, letters_); }
  std::string str() const { return word().str(); }

  bool operator==(const CyclicWord&) const = default;

 private:
  struct Canonical {};
  CyclicWord(int rank, std::vector<Letter> letters, Canonical)
      : rank_(rank), letters_(std::move(letters)) {}

  int rank_;
  std::vector<Letter> letters_;
};

// Index of the least cyclic rotation (Booth's algorithm, linear time).
std::size_t least_rotation_index(std::span<const Letter> letters);

// n(w; x): occurrences of x and x^-1 in one period of w.
long count_letter(const CyclicWord& w, Letter x);

// n(w; x, y): cyclic occurrences of the subword xy plus those of y^-1 x^-1.
long count_pair(const CyclicWord& w, Letter x, Letter y);

// Symmetrized cyclic occurrences of a reduced word v and of v^-1; subwords
// longer than one period wrap around (they are matched against the periodic
// infinite word).
long count_subword(const CyclicWord& w, const Word& v);

// True iff g and h are conjugate, decided by comparing canonical cyclic
// forms. Both inputs must be nontrivial.
bool conjugate_equal(const Word& g, const Word& h);

}  // namespace treq
