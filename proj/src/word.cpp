#include "treq/word.hpp"

#include <cctype>

#include "treq/errors.hpp"

namespace treq {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw DomainError("Word: rank must be >= 1");
}

void check_letter(Letter l, int rank) {
  if (l.generator() > rank) throw DomainError("Word: letter beyond rank");
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::span<const Letter> letters) : rank_(rank) {
  check_rank(rank);
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(l, rank);
    append_reduced(letters_, l);
  }
}

Word::Word(int rank, std::initializer_list<Letter> letters)
    : Word(rank, std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  // The inverse of a reduced word is reduced; no re-reduction happens.
  return Word(rank_, out);
}

Word Word::pow(long n) const {
  const Word& base = *this;
  Word inv = (n < 0) ? inverse() : Word(rank_);
  const Word& rep = (n < 0) ? inv : base;
  std::size_t times = static_cast<std::size_t>(n < 0 ? -n : n);
  std::vector<Letter> out;
  out.reserve(times * letters_.size());
  for (std::size_t i = 0; i < times; ++i) {
    for (Letter l : rep.letters()) append_reduced(out, l);
  }
  return Word(rank_, out);
}

Word operator*(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw DomainError("multiply: rank mismatch");
  std::vector<Letter> out = u.letters_;
  out.reserve(u.length() + v.length());
  for (Letter l : v.letters_) append_reduced(out, l);
  Word r(u.rank());
  r.letters_ = std::move(out);
  return r;
}

Word multiply(const Word& u, const Word& v) { return u * v; }

Word invert(const Word& u) { return u.inverse(); }

Word palindromic_reverse(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return Word(w.rank(), out);
}

AbelianVector abelianize(const Word& w) {
  AbelianVector v(static_cast<std::size_t>(w.rank()), 0);
  for (Letter l : w.letters()) v[static_cast<std::size_t>(l.generator() - 1)] += l.sign();
  return v;
}

std::string letter_to_string(Letter l) {
  if (l.generator() > 26) throw DomainError("letter_to_string: rank beyond 26");
  char c = static_cast<char>('a' + l.generator() - 1);
  if (!l.is_positive()) c = static_cast<char>(std::toupper(c));
  return std::string(1, c);
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s += letter_to_string(l);
  return s;
}

Word Word::parse(std::string_view text, int rank) {
  check_rank(rank);
  std::vector<Letter> out;
  std::size_t i = 0;
  auto skip_separators = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '*')) ++i;
  };
  skip_separators();
  if (i < text.size() && text[i] == '1') {
    // "1" denotes the identity; nothing may follow it.
    ++i;
    skip_separators();
    if (i != text.size()) throw ParseError("parse: unexpected input after '1'");
    return Word(rank);
  }
  while (i < text.size()) {
    char c = text[i];
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("parse: unknown letter '") + c + "'");
    }
    int gen = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
    int sign = std::islower(static_cast<unsigned char>(c)) ? 1 : -1;
    if (gen > rank) {
      throw ParseError(std::string("parse: letter '") + c + "' beyond rank " +
                       std::to_string(rank));
    }
    ++i;
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = (text[i] == '-');
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("parse: malformed exponent");
      }
      long mag = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        if (mag > 1000000) throw ParseError("parse: exponent too large");
        ++i;
      }
      exp = neg ? -mag : mag;
    }
    Letter l(gen, (exp < 0) ? -sign : sign);
    long reps = exp < 0 ? -exp : exp;
    for (long r = 0; r < reps; ++r) append_reduced(out, l);
    skip_separators();
  }
  return Word(rank, out);
}

}  // namespace treq
