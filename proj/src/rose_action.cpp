#include "treq/rose_action.hpp"

#include "treq/cyclic_word.hpp"
#include "treq/errors.hpp"

namespace treq {

RoseAction::RoseAction(int rank_, Automorphism marking_, std::vector<Rational> weights_)
    : rank(rank_), marking(std::move(marking_)), weights(std::move(weights_)) {
  if (marking.rank() != rank) throw DomainError("RoseAction: marking rank mismatch");
  if (weights.size() != static_cast<std::size_t>(rank)) {
    throw DomainError("RoseAction: need one weight per edge");
  }
  for (const Rational& w : weights) {
    if (w <= 0) throw DomainError("RoseAction: weights must be positive");
  }
}

Rational translation_length(const RoseAction& act, const Word& g) {
  if (g.rank() != act.rank) throw DomainError("translation_length: rank mismatch");
  if (g.empty()) return Rational(0);
  CyclicWord core(act.marking.apply(g));
  Rational total(0);
  for (int i = 1; i <= act.rank; ++i) {
    long n = count_letter(core, Letter(i, 1));
    if (n != 0) total += Rational(n) * act.weights[static_cast<std::size_t>(i - 1)];
  }
  return total;
}

std::vector<RoseAction> sample_actions(int rank, int count, int depth, std::uint64_t seed) {
  if (rank < 2) throw DomainError("sample_actions: rank must be >= 2");
  if (depth < 0) throw DomainError("sample_actions: depth must be >= 0");
  Rng rng(seed);
  std::vector<RoseAction> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    int moves = static_cast<int>(rng.below(static_cast<std::uint64_t>(depth + 1)));
    Automorphism marking = Automorphism::identity(rank);
    for (int m = 0; m < moves; ++m) {
      marking = compose(random_whitehead_move(rank, rng), marking);
    }
    std::vector<Rational> weights;
    weights.reserve(static_cast<std::size_t>(rank));
    for (int w = 0; w < rank; ++w) {
      long num = rng.range(1, 16);
      static const long dens[3] = {1, 2, 4};
      weights.push_back(make_rational(num, dens[rng.below(3)]));
    }
    out.emplace_back(rank, std::move(marking), std::move(weights));
  }
  return out;
}

std::optional<LengthWitness> falsify(const Word& g, const Word& h,
                                     std::span<const RoseAction> actions) {
  if (g.empty() || h.empty()) throw DomainError("falsify: trivial input");
  for (std::size_t i = 0; i < actions.size(); ++i) {
    Rational lg = translation_length(actions[i], g);
    Rational lh = translation_length(actions[i], h);
    if (lg != lh) return LengthWitness{i, actions[i], lg, lh};
  }
  return std::nullopt;
}

}  // namespace treq
