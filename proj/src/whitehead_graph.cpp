#include "treq/whitehead_graph.hpp"

#include "treq/endomorphism.hpp"
#include "treq/errors.hpp"

namespace treq {

std::size_t WhiteheadGraph::index(int cx, int cy) const {
  // Upper triangle over 0 <= cx < cy < 2k, row-major.
  const std::size_t m = static_cast<std::size_t>(2 * rank_);
  std::size_t a = static_cast<std::size_t>(cx), b = static_cast<std::size_t>(cy);
  return a * m - a * (a + 1) / 2 + (b - a - 1);
}

WhiteheadGraph::WhiteheadGraph(const CyclicWord& w) : rank_(w.rank()) {
  const std::size_t m = static_cast<std::size_t>(2 * rank_);
  labels_.assign(m * (m - 1) / 2, 0);
  // Each cyclic position (p, q) is one occurrence of the subword pq and
  // contributes to the pair {p, q^-1}; cyclic reducedness rules out p = q^-1.
  const std::size_t n = w.length();
  for (std::size_t i = 0; i < n; ++i) {
    int cp = w[i].code();
    int cq = w.at_mod(i + 1).inverse().code();
    if (cp > cq) std::swap(cp, cq);
    labels_[index(cp, cq)] += 1;
  }
}

long WhiteheadGraph::label(Letter x, Letter y) const {
  if (x.generator() > rank_ || y.generator() > rank_) {
    throw DomainError("WhiteheadGraph::label: letter beyond rank");
  }
  if (x == y) throw DomainError("WhiteheadGraph::label: vertices must differ");
  int cx = x.code(), cy = y.code();
  if (cx > cy) std::swap(cx, cy);
  return labels_[index(cx, cy)];
}

long WhiteheadGraph::label_sum() const {
  long s = 0;
  for (long l : labels_) s += l;
  return s;
}

std::vector<WhiteheadGraph::Entry> WhiteheadGraph::entries() const {
  std::vector<Entry> out;
  const int m = 2 * rank_;
  for (int cx = 0; cx < m; ++cx) {
    for (int cy = cx + 1; cy < m; ++cy) {
      long l = labels_[index(cx, cy)];
      if (l != 0) out.push_back({Letter::from_code(cx), Letter::from_code(cy), l});
    }
  }
  return out;
}

bool graphs_equal(const WhiteheadGraph& g1, const WhiteheadGraph& g2) {
  if (g1.rank() != g2.rank()) throw DomainError("graphs_equal: rank mismatch");
  return g1 == g2;
}

std::pair<long, long> lemma1_check(const CyclicWord& w, Letter x, Letter y) {
  if (x.generator() == y.generator()) throw DomainError("lemma1_check: x = y^{+-1}");
  Automorphism phi = nielsen(x, y, w.rank());
  long lhs = static_cast<long>(phi.apply(w).length()) - static_cast<long>(w.length());
  long rhs = count_letter(w, x) - 2 * count_pair(w, x, y.inverse());
  return {lhs, rhs};
}

Rational lemma2_recover_count(const CyclicWord& w, int generator) {
  const int k = w.rank();
  if (k < 2) throw DomainError("lemma2_recover_count: rank must be >= 2");
  if (generator < 1 || generator > k) throw DomainError("lemma2_recover_count: bad generator");
  long sum = static_cast<long>(w.length());
  for (int j = 1; j <= k; ++j) {
    if (j == generator) continue;
    Letter ai(generator, 1), aj(j, 1);
    long lij = static_cast<long>(nielsen(ai, aj, k).apply(w).length());
    long lji = static_cast<long>(nielsen(aj, ai, k).apply(w).length());
    sum += lij - lji;
  }
  return make_rational(sum, k);
}

}  // namespace treq
