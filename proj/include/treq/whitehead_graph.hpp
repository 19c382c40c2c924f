#pragma once

#include <utility>
#include <vector>

#include "treq/cyclic_word.hpp"
#include "treq/rational.hpp"

namespace treq {

// The labelled graph on the 2k letters with label({x, y}) = n(w; x, y^-1)
// for distinct letters x, y. Stored as a dense upper-triangular table over
// letter codes, so equality is a flat comparison.
class WhiteheadGraph {
 public:
  explicit WhiteheadGraph(const CyclicWord& w);

  int rank() const { return rank_; }
  long label(Letter x, Letter y) const;
  long label_sum() const;

  // Upper-triangular entries in (code(x), code(y)) order, x < y.
  struct Entry {
    Letter x, y;
    long label;
  };
  std::vector<Entry> entries() const;

  bool operator==(const WhiteheadGraph&) const = default;

 private:
  std::size_t index(int cx, int cy) const;

  int rank_;
  std::vector<long> labels_;
};

inline WhiteheadGraph whitehead_graph(const CyclicWord& w) { return WhiteheadGraph(w); }

// Label-table equality; throws DomainError on rank mismatch.
bool graphs_equal(const WhiteheadGraph& g1, const WhiteheadGraph& g2);

// Both sides of ||phi_{x,y}(w)|| - ||w|| = n(w;x) - 2 n(w;x,y^-1); the two
// components are computed through independent code paths (image length vs
// letter counting) so the pair is a genuine cross-check.
std::pair<long, long> lemma1_check(const CyclicWord& w, Letter x, Letter y);

// Recovers n(w; a_i) from cyclic lengths of Nielsen images:
// (1/k) (||w|| + sum_{j != i} (||phi_{i,j}(w)|| - ||phi_{j,i}(w)||)),
// returned as an exact rational so integrality is checkable.
Rational lemma2_recover_count(const CyclicWord& w, int generator);

}  // namespace treq
