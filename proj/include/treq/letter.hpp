#pragma once

#include <compare>

#include "treq/errors.hpp"

namespace treq {

// A signed generator symbol. Generators are numbered 1..k. Internally a
// letter is a single code 2*(gen-1) + (sign < 0), so that integer order on
// codes realizes the total letter order a < a^-1 < b < b^-1 < ... used for
// canonical rotations.
class Letter {
 public:
  Letter(int generator, int sign) {
    if (generator < 1) throw DomainError("Letter: generator index must be >= 1");
    if (sign != 1 && sign != -1) throw DomainError("Letter: sign must be +1 or -1");
    code_ = 2 * (generator - 1) + (sign < 0 ? 1 : 0);
  }

  static Letter from_code(int code) {
    if (code < 0) throw DomainError("Letter: negative code");
    return Letter(code, Raw{});
  }

  int generator() const { return (code_ >> 1) + 1; }
  int sign() const { return (code_ & 1) ? -1 : 1; }
  bool is_positive() const { return (code_ & 1) == 0; }
  Letter inverse() const { return Letter(code_ ^ 1, Raw{}); }
  int code() const { return code_; }

  friend auto operator<=>(const Letter&, const Letter&) = default;

 private:
  struct Raw {};
  Letter(int code, Raw) : code_(code) {}
  int code_;
};

}  // namespace treq
