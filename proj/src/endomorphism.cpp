#include "treq/endomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "treq/errors.hpp"

namespace treq {

Endomorphism::Endomorphism(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (rank < 1) throw DomainError("Endomorphism: rank must be >= 1");
  if (images_.size() != static_cast<std::size_t>(rank)) {
    throw DomainError("Endomorphism: need one image per generator");
  }
  for (const Word& w : images_) {
    if (w.rank() != rank) throw DomainError("Endomorphism: image rank mismatch");
  }
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(Word(rank, {Letter(i, 1)}));
  return Endomorphism(rank, std::move(images));
}

const Word& Endomorphism::image(int generator) const {
  if (generator < 1 || generator > rank_) throw DomainError("image: generator out of range");
  return images_[static_cast<std::size_t>(generator - 1)];
}

bool Endomorphism::is_identity() const { return *this == identity(rank_); }

Word Endomorphism::apply(const Word& w) const {
  if (w.rank() != rank_) throw DomainError("apply: rank mismatch");
  std::vector<Letter> out;
  out.reserve(w.length() * 2);
  for (Letter l : w.letters()) {
    const Word& img = images_[static_cast<std::size_t>(l.generator() - 1)];
    if (l.is_positive()) {
      for (Letter m : img.letters()) append_reduced(out, m);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        append_reduced(out, it->inverse());
      }
    }
  }
  return Word(rank_, out);
}

CyclicWord Endomorphism::apply(const CyclicWord& w) const {
  Word img = apply(w.word());
  if (img.empty()) throw DomainError("apply: degenerate image of a nontrivial cyclic word");
  return CyclicWord(img);
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (f.rank() != g.rank()) throw DomainError("compose: rank mismatch");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(f.rank()));
  for (const Word& w : g.images()) images.push_back(f.apply(w));
  return Endomorphism(f.rank(), std::move(images));
}

Automorphism::Automorphism(Endomorphism forward, Endomorphism backward)
    : fwd_(std::move(forward)), bwd_(std::move(backward)) {
  if (fwd_.rank() != bwd_.rank()) throw DomainError("Automorphism: rank mismatch");
  if (!compose(fwd_, bwd_).is_identity() || !compose(bwd_, fwd_).is_identity()) {
    throw DomainError("Automorphism: recorded inverse fails to invert");
  }
}

Automorphism Automorphism::identity(int rank) {
  return Automorphism(Endomorphism::identity(rank), Endomorphism::identity(rank));
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  return Automorphism(compose(f.forward(), g.forward()),
                      compose(g.backward(), f.backward()));
}

Automorphism nielsen(Letter x, Letter y, int rank) {
  if (x.generator() > rank || y.generator() > rank) throw DomainError("nielsen: letter beyond rank");
  if (x.generator() == y.generator()) throw DomainError("nielsen: x must differ from y^{+-1}");
  auto images_for = [&](Letter to) {
    // phi: x -> x*to. On the positive generator g of x this reads
    //   g -> g*to        when x = g
    //   g -> to^-1 * g   when x = g^-1.
    std::vector<Word> images;
    for (int i = 1; i <= rank; ++i) {
      Letter gi(i, 1);
      if (i != x.generator()) {
        images.push_back(Word(rank, {gi}));
      } else if (x.is_positive()) {
        images.push_back(Word(rank, {gi, to}));
      } else {
        images.push_back(Word(rank, {to.inverse(), gi}));
      }
    }
    return images;
  };
  return Automorphism(Endomorphism(rank, images_for(y)),
                      Endomorphism(rank, images_for(y.inverse())));
}

Automorphism whitehead_type1(const std::vector<int>& perm, const std::vector<int>& signs) {
  const int rank = static_cast<int>(perm.size());
  if (signs.size() != perm.size()) throw DomainError("whitehead_type1: size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 1 || p > rank || seen[static_cast<std::size_t>(p - 1)]) {
      throw DomainError("whitehead_type1: invalid permutation");
    }
    seen[static_cast<std::size_t>(p - 1)] = true;
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw DomainError("whitehead_type1: signs must be +-1");
  }
  std::vector<Word> fwd(static_cast<std::size_t>(rank), Word(rank));
  std::vector<Word> bwd(static_cast<std::size_t>(rank), Word(rank));
  for (int i = 1; i <= rank; ++i) {
    int tgt = perm[static_cast<std::size_t>(i - 1)];
    int sgn = signs[static_cast<std::size_t>(i - 1)];
    fwd[static_cast<std::size_t>(i - 1)] = Word(rank, {Letter(tgt, sgn)});
    bwd[static_cast<std::size_t>(tgt - 1)] = Word(rank, {Letter(i, sgn)});
  }
  return Automorphism(Endomorphism(rank, std::move(fwd)), Endomorphism(rank, std::move(bwd)));
}

Automorphism whitehead_type2(Letter multiplier, const std::vector<Type2Action>& actions) {
  const int rank = static_cast<int>(actions.size());
  if (multiplier.generator() > rank) throw DomainError("whitehead_type2: multiplier beyond rank");
  if (actions[static_cast<std::size_t>(multiplier.generator() - 1)] != Type2Action::Fix) {
    throw DomainError("whitehead_type2: assignment touches the multiplier");
  }
  auto build = [&](Letter m) {
    std::vector<Word> images;
    for (int i = 1; i <= rank; ++i) {
      Letter gi(i, 1);
      if (i == m.generator()) {
        images.push_back(Word(rank, {gi}));
        continue;
      }
      switch (actions[static_cast<std::size_t>(i - 1)]) {
        case Type2Action::Fix:
          images.push_back(Word(rank, {gi}));
          break;
        case Type2Action::Right:
          images.push_back(Word(rank, {gi, m}));
          break;
        case Type2Action::Left:
          images.push_back(Word(rank, {m.inverse(), gi}));
          break;
        case Type2Action::Conjugate:
          images.push_back(Word(rank, {m.inverse(), gi, m}));
          break;
      }
    }
    return Endomorphism(rank, std::move(images));
  };
  // The inverse is the same assignment with multiplier m^-1.
  return Automorphism(build(multiplier), build(multiplier.inverse()));
}

Automorphism random_whitehead_move(int rank, Rng& rng) {
  if (rng.below(4) == 0) {
    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 1);
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    std::vector<int> signs;
    signs.reserve(perm.size());
    for (int i = 0; i < rank; ++i) signs.push_back(rng.coin() ? 1 : -1);
    return whitehead_type1(perm, signs);
  }
  Letter m = Letter::from_code(static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * rank))));
  std::vector<Type2Action> actions(static_cast<std::size_t>(rank), Type2Action::Fix);
  for (int i = 1; i <= rank; ++i) {
    if (i == m.generator()) continue;
    actions[static_cast<std::size_t>(i - 1)] = static_cast<Type2Action>(rng.below(4));
  }
  return whitehead_type2(m, actions);
}

Word substitute(const Word& pattern, std::span<const Word> values) {
  if (values.empty()) throw DomainError("substitute: no values");
  if (static_cast<std::size_t>(pattern.rank()) > values.size()) {
    throw DomainError("substitute: pattern rank exceeds value count");
  }
  int rank = values[0].rank();
  for (const Word& v : values) {
    if (v.rank() != rank) throw DomainError("substitute: value rank mismatch");
  }
  std::vector<Letter> out;
  for (Letter l : pattern.letters()) {
    const Word& v = values[static_cast<std::size_t>(l.generator() - 1)];
    if (l.is_positive()) {
      for (Letter m : v.letters()) append_reduced(out, m);
    } else {
      for (auto it = v.letters().rbegin(); it != v.letters().rend(); ++it) {
        append_reduced(out, it->inverse());
      }
    }
  }
  return Word(rank, out);
}

}  // namespace treq
