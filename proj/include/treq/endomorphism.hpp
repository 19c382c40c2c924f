#pragma once

#include <vector>

#include "treq/cyclic_word.hpp"
#include "treq/rng.hpp"
#include "treq/word.hpp"

namespace treq {

// A map of the free group given by images of the positive generators.
// Arbitrary images are accepted; injectivity is not certified.
class Endomorphism {
 public:
  Endomorphism(int rank, std::vector<Word> images);
  static Endomorphism identity(int rank);

  int rank() const { return rank_; }
  const Word& image(int generator) const;  // 1-based
  const std::vector<Word>& images() const { return images_; }
  bool is_identity() const;

  Word apply(const Word& w) const;
  // Applies to a conjugacy class; throws DomainError if the image collapses
  // to the identity (possible only for non-injective maps).
  CyclicWord apply(const CyclicWord& w) const;

  bool operator==(const Endomorphism&) const = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

// f after g: (f . g)(a_i) = f(g(a_i)).
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

// An endomorphism packaged with a recorded inverse; both compositions are
// checked to fix every generator at construction time.
class Automorphism {
 public:
  Automorphism(Endomorphism forward, Endomorphism backward);
  static Automorphism identity(int rank);

  int rank() const { return fwd_.rank(); }
  const Endomorphism& forward() const { return fwd_; }
  const Endomorphism& backward() const { return bwd_; }

  Word apply(const Word& w) const { return fwd_.apply(w); }
  CyclicWord apply(const CyclicWord& w) const { return fwd_.apply(w); }
  Automorphism inverted() const { return Automorphism(bwd_, fwd_); }

  bool operator==(const Automorphism&) const = default;

 private:
  Endomorphism fwd_, bwd_;
};

Automorphism compose(const Automorphism& f, const Automorphism& g);

// The Nielsen automorphism phi_{x,y}: x -> xy, every generator other than
// x^{+-1} fixed. Requires x != y^{+-1}.
Automorphism nielsen(Letter x, Letter y, int rank);

// First-kind Whitehead automorphism: a_i -> a_{perm[i-1]}^{signs[i-1]};
// perm holds 1-based generator indices.
Automorphism whitehead_type1(const std::vector<int>& perm, const std::vector<int>& signs);

// Second-kind Whitehead automorphism with multiplier m: each generator y
// with gen(y) != gen(m) maps to one of y, ym, m^-1 y, m^-1 y m; m itself is
// fixed. The assignment is indexed by positive generator (1-based slot
// i-1); the multiplier's slot must be Fix.
enum class Type2Action { Fix, Right, Left, Conjugate };
Automorphism whitehead_type2(Letter multiplier, const std::vector<Type2Action>& actions);

// Uniformly random Whitehead generator (type 1 with probability 1/4, else
// type 2), used by the action sampler and by property tests.
Automorphism random_whitehead_move(int rank, Rng& rng);

// Substitutes values[i] for generator i+1 of pattern and reduces. All
// values must share a rank, which becomes the result's rank.
Word substitute(const Word& pattern, std::span<const Word> values);

}  // namespace treq
