#include "treq/cyclic_word.hpp"

#include <algorithm>

#include "treq/errors.hpp"

namespace treq {

std::size_t least_rotation_index(std::span<const Letter> s) {
  // Booth's algorithm on the doubled sequence; f is the failure function of
  // the best rotation candidate starting at k.
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(s.size());
  if (n <= 1) return 0;
  auto at = [&](std::ptrdiff_t i) { return s[static_cast<std::size_t>(i % n)]; };
  std::vector<std::ptrdiff_t> f(static_cast<std::size_t>(2 * n), -1);
  std::ptrdiff_t k = 0;
  for (std::ptrdiff_t j = 1; j < 2 * n; ++j) {
    Letter sj = at(j);
    std::ptrdiff_t i = f[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != at(k)) {
      if (sj < at(k)) k = j;
      f[static_cast<std::size_t>(j - k)] = -1;
    } else {
      f[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return static_cast<std::size_t>(k % n);
}

namespace {

// Peels matching ends off a reduced word: w = c * core * c^-1 with core
// cyclically reduced, both taken verbatim from w's letters.
std::pair<std::vector<Letter>, std::vector<Letter>> strip_conjugator(const Word& w) {
  const auto& L = w.letters();
  std::size_t i = 0, j = L.size();
  while (j - i >= 2 && L[i] == L[j - 1].inverse()) {
    ++i;
    --j;
  }
  std::vector<Letter> conj(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(i));
  std::vector<Letter> core(L.begin() + static_cast<std::ptrdiff_t>(i),
                           L.begin() + static_cast<std::ptrdiff_t>(j));
  return {std::move(conj), std::move(core)};
}

std::vector<Letter> rotate_to(std::vector<Letter> v, std::size_t r) {
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
  return v;
}

}  // namespace

CyclicWord::CyclicWord(const Word& w) : rank_(w.rank()) {
  if (w.empty()) throw DomainError("CyclicWord: trivial word has no cyclic form");
  auto [conj, core] = strip_conjugator(w);
  std::size_t r = least_rotation_index(core);
  letters_ = rotate_to(std::move(core), r);
}

std::pair<Word, CyclicWord> CyclicWord::reduce(const Word& w) {
  if (w.empty()) throw DomainError("cyclic_reduce: trivial word");
  auto [conj, core] = strip_conjugator(w);
  std::size_t r = least_rotation_index(core);
  // w = (conj * core[0..r)) * canonical * (conj * core[0..r))^-1, and the
  // concatenated conjugator is reduced as written.
  conj.insert(conj.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(r));
  CyclicWord cw(w.rank(), rotate_to(std::move(core), r), Canonical{});
  return {Word(w.rank(), conj), std::move(cw)};
}

CyclicWord CyclicWord::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  std::size_t r = least_rotation_index(inv);
  return CyclicWord(rank_, rotate_to(std::move(inv), r), Canonical{});
}

CyclicWord CyclicWord::palindromic_reverse() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  std::size_t r = least_rotation_index(rev);
  return CyclicWord(rank_, rotate_to(std::move(rev), r), Canonical{});
}

long count_letter(const CyclicWord& w, Letter x) {
  if (x.generator() > w.rank()) throw DomainError("count_letter: letter beyond rank");
  long n = 0;
  for (Letter l : w.letters()) {
    if (l.generator() == x.generator()) ++n;
  }
  return n;
}

long count_pair(const CyclicWord& w, Letter x, Letter y) {
  if (x.generator() > w.rank() || y.generator() > w.rank()) {
    throw DomainError("count_pair: letter beyond rank");
  }
  const std::size_t n = w.length();
  const Letter xi = y.inverse(), yi = x.inverse();  // y^-1 x^-1
  long count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Letter p = w[i], q = w.at_mod(i + 1);
    if (p == x && q == y) ++count;
    if (p == xi && q == yi) ++count;
  }
  return count;
}

long count_subword(const CyclicWord& w, const Word& v) {
  if (v.empty()) throw DomainError("count_subword: trivial subword");
  if (v.rank() > w.rank()) throw DomainError("count_subword: rank mismatch");
  const std::size_t n = w.length();
  const Word vi = v.inverse();
  auto occurrences = [&](const Word& pat) {
    long c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool hit = true;
      for (std::size_t j = 0; j < pat.length(); ++j) {
        if (w.at_mod(i + j) != pat[j]) {
          hit = false;
          break;
        }
      }
      if (hit) ++c;
    }
    return c;
  };
  // v = v^-1 is impossible in a free group, so the two counts never overlap.
  return occurrences(v) + occurrences(vi);
}

bool conjugate_equal(const Word& g, const Word& h) {
  if (g.rank() != h.rank()) throw DomainError("conjugate_equal: rank mismatch");
  if (g.empty() || h.empty()) throw DomainError("conjugate_equal: trivial input");
  return CyclicWord(g) == CyclicWord(h);
}

}  // namespace treq
