#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treq/letter.hpp"

namespace treq {

// Exponent-sum image of a word in Z^k.
using AbelianVector = std::vector<long>;

// A freely reduced word over the basis a_1..a_k. The letter sequence is
// reduced on construction, so |g| is always the reduced length.
class Word {
 public:
  explicit Word(int rank);
  Word(int rank, std::span<const Letter> letters);
  Word(int rank, std::initializer_list<Letter> letters);

  // Accepts the compact case encoding ("abA", rank <= 26) and the exponent
  // syntax ("a^-3*b^2"); the two may be mixed. "1" or "" parses to the
  // identity.
  static Word parse(std::string_view text, int rank);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(long n) const;

  // Compact textual form; the identity prints as "1".
  std::string str() const;

  friend Word operator*(const Word& u, const Word& v);
  bool operator==(const Word&) const = default;

 private:
  int rank_;
  std::vector<Letter> letters_;
};

// Appends a letter to a reduced letter sequence, cancelling if it inverts
// the current last letter. Building through this keeps sequences reduced.
inline void append_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

inline Word free_reduce(int rank, std::span<const Letter> letters) {
  return Word(rank, letters);
}

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);

// The word read backwards without inverting letters; equals
// (w(a_1^-1, ..., a_k^-1))^-1.
Word palindromic_reverse(const Word& w);

AbelianVector abelianize(const Word& w);

std::string letter_to_string(Letter l);

}  // namespace treq
