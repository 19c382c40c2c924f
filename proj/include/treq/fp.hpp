#pragma once

#include <cstdint>
#include <optional>

#include "treq/errors.hpp"

namespace treq {

// F_p with p = 2^61 - 1 (Mersenne). p = 3 (mod 4), so square roots, when
// they exist, are x^((p+1)/4).
class Fp {
 public:
  static constexpr std::uint64_t P = (1ULL << 61) - 1;

  Fp() : v_(0) {}
  explicit Fp(long long v) {
    long long m = v % static_cast<long long>(P);
    if (m < 0) m += static_cast<long long>(P);
    v_ = static_cast<std::uint64_t>(m);
  }

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return from_raw(add(a.v_, b.v_)); }
  friend Fp operator-(Fp a, Fp b) { return from_raw(sub(a.v_, b.v_)); }
  friend Fp operator*(Fp a, Fp b) { return from_raw(mul(a.v_, b.v_)); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
  Fp& operator+=(Fp o) { v_ = add(v_, o.v_); return *this; }
  Fp& operator-=(Fp o) { v_ = sub(v_, o.v_); return *this; }
  Fp& operator*=(Fp o) { v_ = mul(v_, o.v_); return *this; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, acc = Fp(1);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Fp inverse() const {
    if (v_ == 0) throw DomainError("Fp: inverse of zero");
    return pow(P - 2);
  }

  // Square root if this is a quadratic residue.
  std::optional<Fp> sqrt() const {
    if (v_ == 0) return Fp(0);
    Fp r = pow((P + 1) / 4);
    if (r * r == *this) return r;
    return std::nullopt;
  }

  friend bool operator==(Fp, Fp) = default;

 private:
  static Fp from_raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= P ? s - P : s;
  }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % P);
  }

  std::uint64_t v_;
};

}  // namespace treq
