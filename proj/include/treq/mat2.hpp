#pragma once

#include <array>
#include <span>
#include <vector>

#include "treq/errors.hpp"
#include "treq/fp.hpp"
#include "treq/rational.hpp"
#include "treq/rng.hpp"
#include "treq/word.hpp"

namespace treq {

// 2x2 matrix over an exact field (Rational or Fp). All arithmetic is exact;
// there is no floating point anywhere in the trace machinery.
template <class F>
struct Mat2 {
  F a, b, c, d;

  static Mat2 identity() { return {F(1), F(0), F(0), F(1)}; }

  F trace() const { return a + d; }
  F det() const { return a * d - b * c; }

  Mat2 inverse() const {
    F dt = det();
    if (dt == F(0)) throw DomainError("Mat2: singular matrix");
    F inv = F(1) / dt;
    return {d * inv, -b * inv, -c * inv, a * inv};
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  Mat2 pow(long n) const {
    Mat2 base = n < 0 ? inverse() : *this;
    std::uint64_t e = static_cast<std::uint64_t>(n < 0 ? -n : n);
    Mat2 acc = identity();
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Requires det = 1; used where an SL(2) matrix is claimed.
template <class F>
Mat2<F> sl2(F a, F b, F c, F d) {
  Mat2<F> m{a, b, c, d};
  if (m.det() != F(1)) throw DomainError("sl2: determinant is not 1");
  return m;
}

// Multiplies out w under one matrix per generator. Inverse letters use
// exact matrix inverses; a singular assignment is an error.
template <class F>
Mat2<F> eval_word(const Word& w, std::span<const Mat2<F>> gens) {
  if (gens.size() < static_cast<std::size_t>(w.rank())) {
    throw DomainError("eval_word: not enough matrices");
  }
  std::vector<bool> have_inv(gens.size(), false);
  std::vector<Mat2<F>> inv(gens.size(), Mat2<F>::identity());
  Mat2<F> acc = Mat2<F>::identity();
  for (Letter l : w.letters()) {
    std::size_t i = static_cast<std::size_t>(l.generator() - 1);
    if (l.is_positive()) {
      acc = acc * gens[i];
    } else {
      if (!have_inv[i]) {
        inv[i] = gens[i].inverse();
        have_inv[i] = true;
      }
      acc = acc * inv[i];
    }
  }
  return acc;
}

template <class F>
F trace(const Mat2<F>& m) {
  return m.trace();
}

// Random invertible matrix over F_p.
Mat2<Fp> random_gl2_fp(Rng& rng);

// Random determinant-1 matrix over F_p: sample GL(2, F_p) and divide by a
// square root of the determinant, resampling when it is a non-residue.
// Throws SamplingError after max_retries failures.
Mat2<Fp> random_sl2_fp(Rng& rng, int max_retries = 256);

// Random SL(2, Z) matrix built from elementary shears; entries stay small
// for the given number of factors. Exact over the rationals.
Mat2<Rational> random_sl2_rational(Rng& rng, int factors = 6);

}  // namespace treq
