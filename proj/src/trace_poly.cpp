#include "treq/trace_poly.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "treq/cyclic_word.hpp"
#include "treq/errors.hpp"

namespace treq {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("TracePolynomial: coefficient overflow");
  }
  return r;
}

}  // namespace

bool TracePolynomial::term_order(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  int ma = std::max({a[0], a[1], a[2]});
  int mb = std::max({b[0], b[1], b[2]});
  if (ma != mb) return ma > mb;
  return a > b;
}

TracePolynomial TracePolynomial::constant(std::int64_t c) {
  TracePolynomial p;
  if (c != 0) p.terms_.push_back({{0, 0, 0}, c});
  return p;
}

TracePolynomial TracePolynomial::variable(int idx) {
  TracePolynomial p;
  std::array<int, 3> e{0, 0, 0};
  e[static_cast<std::size_t>(idx)] = 1;
  p.terms_.push_back({e, 1});
  return p;
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && term_order(terms_[i].exp, o.terms_[j].exp))) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || term_order(o.terms_[j].exp, terms_[i].exp)) {
      merged.push_back(o.terms_[j++]);
    } else {
      std::int64_t c = add_checked(terms_[i].coef, o.terms_[j].coef);
      if (c != 0) merged.push_back({terms_[i].exp, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& o) {
  TracePolynomial neg = o;
  for (Term& t : neg.terms_) {
    if (t.coef == INT64_MIN) throw std::overflow_error("TracePolynomial: coefficient overflow");
    t.coef = -t.coef;
  }
  return *this += neg;
}

TracePolynomial TracePolynomial::times_variable(int idx) const {
  TracePolynomial p = *this;
  for (Term& t : p.terms_) t.exp[static_cast<std::size_t>(idx)] += 1;
  // Bumping one exponent does not preserve the canonical order; re-sort.
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return term_order(a.exp, b.exp); });
  return p;
}

std::string TracePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    std::int64_t c = t.coef;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::uint64_t mag = c < 0 ? -static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    std::string mono;
    const char* names = "xyz";
    for (int v = 0; v < 3; ++v) {
      int e = t.exp[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

std::string letter_key(const std::vector<Letter>& ls) {
  std::string k;
  k.reserve(ls.size());
  for (Letter l : ls) k.push_back(static_cast<char>('0' + l.code()));
  return k;
}

using Memo = std::unordered_map<std::string, TracePolynomial>;

TracePolynomial trace_of(const Word& w, Memo& memo);

TracePolynomial trace_of_letters(const std::vector<Letter>& ls, Memo& memo) {
  return trace_of(Word(2, ls), memo);
}

// u is the canonical letter sequence of a cyclically reduced word.
TracePolynomial trace_compute(const std::vector<Letter>& u, Memo& memo) {
  const std::size_t n = u.size();
  if (n == 0) return TracePolynomial::constant(2);
  if (n == 1) return TracePolynomial::variable(u[0].generator() - 1);

  // Mixed signs: rotate a negative letter to the end, u ~ m s^-1, and use
  // tr(m s^-1) = tr(s) tr(m) - tr(m s). Each step removes one inverse
  // letter from both branches.
  auto neg = std::find_if(u.begin(), u.end(), [](Letter l) { return !l.is_positive(); });
  if (neg != u.end()) {
    std::size_t i = static_cast<std::size_t>(neg - u.begin());
    Letter s = u[i].inverse();
    std::vector<Letter> m;
    m.reserve(n - 1);
    for (std::size_t j = 1; j < n; ++j) m.push_back(u[(i + j) % n]);
    std::vector<Letter> ms = m;
    ms.push_back(s);
    TracePolynomial p = trace_of_letters(m, memo).times_variable(s.generator() - 1);
    p -= trace_of_letters(ms, memo);
    return p;
  }

  // Positive word: Cayley-Hamilton step at a repeated generator,
  // tr(s s rest) = tr(s) tr(s rest) - tr(rest).
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].generator() == u[(i + 1) % n].generator()) {
      std::vector<Letter> tail;  // s rest, starting at position i+1
      tail.reserve(n - 1);
      for (std::size_t j = 1; j < n; ++j) tail.push_back(u[(i + j) % n]);
      std::vector<Letter> rest(tail.begin() + 1, tail.end());
      TracePolynomial p = trace_of_letters(tail, memo).times_variable(u[i].generator() - 1);
      p -= trace_of_letters(rest, memo);
      return p;
    }
  }

  // Strictly alternating positive word (ab)^m: three-term recursion in z.
  std::size_t m = n / 2;
  if (m == 1) return TracePolynomial::variable(2);
  std::vector<Letter> once = {Letter(1, 1), Letter(2, 1)};
  std::vector<Letter> prev1, prev2;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    prev1.insert(prev1.end(), once.begin(), once.end());
  }
  for (std::size_t i = 0; i + 2 < m; ++i) {
    prev2.insert(prev2.end(), once.begin(), once.end());
  }
  TracePolynomial p = trace_of_letters(prev1, memo).times_variable(2);
  p -= trace_of_letters(prev2, memo);
  return p;
}

TracePolynomial trace_of(const Word& w, Memo& memo) {
  if (w.empty()) return TracePolynomial::constant(2);
  // tr is a class function invariant under inversion, so the memo key is
  // the smaller of the canonical rotations of the core and of its inverse.
  // The recursion itself runs on whichever of the two has fewer inverse
  // letters; that keeps the inverse-elimination measure strictly
  // decreasing.
  CyclicWord cw(w);
  CyclicWord ci = cw.inverse();
  const std::vector<Letter>& a = cw.letters();
  const std::vector<Letter>& b = ci.letters();
  const std::vector<Letter>& key_ls = std::min(a, b);
  auto negs = [](const std::vector<Letter>& v) {
    std::size_t c = 0;
    for (Letter l : v) c += !l.is_positive();
    return c;
  };
  const std::vector<Letter>& rep =
      negs(a) < negs(b) ? a : (negs(b) < negs(a) ? b : key_ls);

  std::string key = letter_key(key_ls);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  TracePolynomial p = trace_compute(rep, memo);
  memo.emplace(std::move(key), p);
  return p;
}

std::mutex g_trace_mutex;
Memo g_trace_memo;

}  // namespace

TracePolynomial trace_poly(const Word& w) {
  if (w.rank() != 2) throw DomainError("trace_poly: rank-2 words only");
  std::lock_guard<std::mutex> lock(g_trace_mutex);
  return trace_of(w, g_trace_memo);
}

bool char_equiv_symbolic(const Word& u, const Word& v) {
  return trace_poly(u) == trace_poly(v);
}

RandomizedVerdict char_equiv_randomized(const Word& u, const Word& v, int samples,
                                        std::uint64_t seed) {
  const int rank = std::max(u.rank(), v.rank());
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::vector<Mat2<Fp>> gens;
    gens.reserve(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) gens.push_back(random_sl2_fp(rng));
    Fp tu = eval_word(u, std::span<const Mat2<Fp>>(gens)).trace();
    Fp tv = eval_word(v, std::span<const Mat2<Fp>>(gens)).trace();
    if (!(tu == tv)) return RandomizedVerdict::Distinct;
  }
  return RandomizedVerdict::ProbablyEquivalent;
}

}  // namespace treq
