#pragma once

#include <optional>
#include <span>
#include <vector>

#include "treq/endomorphism.hpp"
#include "treq/rational.hpp"

namespace treq {

// A free simplicial action presented as a marked metric rose: the marking
// twists the group, the weights are the edge lengths. The translation
// length of g is the weighted letter count of the marked image's cyclic
// form.
struct RoseAction {
  int rank;
  Automorphism marking;
  std::vector<Rational> weights;

  RoseAction(int rank_, Automorphism marking_, std::vector<Rational> weights_);
};

// sum_i weights[i] * n([marking(g)]; a_i); zero iff g is trivial.
Rational translation_length(const RoseAction& act, const Word& g);

// Deterministic sample of `count` rose actions. Each marking composes a
// seed-dependent number (0..depth) of random Whitehead generators; each
// weight is u/d with u uniform in 1..16 and d in {1, 2, 4}.
std::vector<RoseAction> sample_actions(int rank, int count, int depth, std::uint64_t seed);

struct LengthWitness {
  std::size_t action_index;
  RoseAction action;
  Rational len_g, len_h;
};

// First sampled action (in order) where the two translation lengths differ
// exactly; such a witness certifies that g and h are not translation
// equivalent. No witness proves nothing.
std::optional<LengthWitness> falsify(const Word& g, const Word& h,
                                     std::span<const RoseAction> actions);

}  // namespace treq
