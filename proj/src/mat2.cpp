#include "treq/mat2.hpp"

namespace treq {

Mat2<Fp> random_gl2_fp(Rng& rng) {
  for (int tries = 0; tries < 256; ++tries) {
    Mat2<Fp> m{Fp(static_cast<long long>(rng.below(Fp::P))), Fp(static_cast<long long>(rng.below(Fp::P))), Fp(static_cast<long long>(rng.below(Fp::P))),
               Fp(static_cast<long long>(rng.below(Fp::P)))};
    if (!m.det().is_zero()) return m;
  }
  throw SamplingError("random_gl2_fp: no invertible matrix found");
}

Mat2<Fp> random_sl2_fp(Rng& rng, int max_retries) {
  for (int tries = 0; tries < max_retries; ++tries) {
    Mat2<Fp> m{Fp(static_cast<long long>(rng.below(Fp::P))), Fp(static_cast<long long>(rng.below(Fp::P))), Fp(static_cast<long long>(rng.below(Fp::P))),
               Fp(static_cast<long long>(rng.below(Fp::P)))};
    Fp d = m.det();
    if (d.is_zero()) continue;
    auto s = d.sqrt();
    if (!s) continue;  // non-residue determinant: resample
    Fp inv = s->inverse();
    return {m.a * inv, m.b * inv, m.c * inv, m.d * inv};
  }
  throw SamplingError("random_sl2_fp: retry budget exhausted");
}

Mat2<Rational> random_sl2_rational(Rng& rng, int factors) {
  Mat2<Rational> m = Mat2<Rational>::identity();
  for (int i = 0; i < factors; ++i) {
    long r = rng.range(1, 3) * (rng.coin() ? 1 : -1);
    Mat2<Rational> shear = rng.coin()
                               ? Mat2<Rational>{Rational(1), Rational(r), Rational(0), Rational(1)}
                               : Mat2<Rational>{Rational(1), Rational(0), Rational(r), Rational(1)};
    m = m * shear;
  }
  return m;
}

}  // namespace treq
