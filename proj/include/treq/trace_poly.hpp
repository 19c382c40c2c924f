#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "treq/mat2.hpp"
#include "treq/word.hpp"

namespace treq {

// Sparse integer polynomial in x = tr A, y = tr B, z = tr AB. Terms are
// kept in the canonical order used for printing and serialization: larger
// maximal exponent first, ties by lexicographically larger (x, y, z)
// exponent triple. Coefficients are checked 64-bit integers; overflow
// raises std::overflow_error rather than wrapping.
class TracePolynomial {
 public:
  struct Term {
    std::array<int, 3> exp;
    std::int64_t coef;
    bool operator==(const Term&) const = default;
  };

  TracePolynomial() = default;
  static TracePolynomial constant(std::int64_t c);
  static TracePolynomial variable(int idx);  // 0 = x, 1 = y, 2 = z

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  TracePolynomial& operator+=(const TracePolynomial& o);
  TracePolynomial& operator-=(const TracePolynomial& o);
  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }

  // Multiplication by a single variable (the only product the trace
  // recursion needs).
  TracePolynomial times_variable(int idx) const;

  template <class F>
  F evaluate(const F& x, const F& y, const F& z) const {
    F acc(0);
    for (const Term& t : terms_) {
      F m(t.coef);
      for (int i = 0; i < t.exp[0]; ++i) m = m * x;
      for (int i = 0; i < t.exp[1]; ++i) m = m * y;
      for (int i = 0; i < t.exp[2]; ++i) m = m * z;
      acc = acc + m;
    }
    return acc;
  }

  // Canonical printing, e.g. "x^2 + y^2 + z^2 - x*y*z - 2".
  std::string str() const;

  bool operator==(const TracePolynomial&) const = default;

  static bool term_order(const std::array<int, 3>& a, const std::array<int, 3>& b);

 private:
  std::vector<Term> terms_;
};

// The Fricke polynomial f_w with tr w(A,B) = f_w(tr A, tr B, tr AB) for all
// A, B in SL(2, K) over every field K. Rank-2 words only. Memoized on the
// canonical cyclic form (min of the class of w and of w^-1); the memo is
// mutex-guarded, so concurrent calls are safe.
TracePolynomial trace_poly(const Word& w);

// True iff u and v have equal trace under every SL(2) representation,
// decided symbolically via f_u = f_v. Rank-2 words only.
bool char_equiv_symbolic(const Word& u, const Word& v);

enum class RandomizedVerdict { Distinct, ProbablyEquivalent };

// Schwartz-Zippel style screening over random SL(2, F_p) representations;
// works in any rank. Distinct is certain; the other verdict is "no
// separating representation found among `samples` tries".
RandomizedVerdict char_equiv_randomized(const Word& u, const Word& v, int samples,
                                        std::uint64_t seed);

// Evaluates tr w(X, Y) and tr w^R(X, Y); the two are equal for all
// invertible X, Y over any field.
template <class F>
std::pair<F, F> gl2_palindrome_check(const Word& w, const Mat2<F>& X, const Mat2<F>& Y) {
  if (w.rank() != 2) throw DomainError("gl2_palindrome_check: rank-2 words only");
  std::array<Mat2<F>, 2> gens = {X, Y};
  F t1 = eval_word(w, std::span<const Mat2<F>>(gens)).trace();
  F t2 = eval_word(palindromic_reverse(w), std::span<const Mat2<F>>(gens)).trace();
  return {t1, t2};
}

// Evaluates tr(A^p B^q) and tr(A^q B^p) for B = T A T^-1; equal for any
// invertible A, T and any integer exponents.
template <class F>
std::pair<F, F> conjugate_power_check(long p, long q, const Mat2<F>& A, const Mat2<F>& T) {
  Mat2<F> B = T * A * T.inverse();
  F t1 = (A.pow(p) * B.pow(q)).trace();
  F t2 = (A.pow(q) * B.pow(p)).trace();
  return {t1, t2};
}

}  // namespace treq
