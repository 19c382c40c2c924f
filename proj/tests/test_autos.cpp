#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "treq/endomorphism.hpp"
#include "treq/errors.hpp"
#include "treq/random_words.hpp"
#include "treq/whitehead_graph.hpp"

using namespace treq;

namespace {

Letter L(char c) {
  int gen = std::tolower(c) - 'a' + 1;
  return Letter(gen, std::islower(c) ? 1 : -1);
}

Word W(const std::string& s, int rank = 2) { return Word::parse(s, rank); }

Automorphism tau(int rank) {
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 1);
  return whitehead_type1(perm, std::vector<int>(static_cast<std::size_t>(rank), -1));
}

Automorphism random_aut(int rank, int moves, Rng& rng) {
  Automorphism a = Automorphism::identity(rank);
  for (int i = 0; i < moves; ++i) a = compose(random_whitehead_move(rank, rng), a);
  return a;
}

}  // namespace

TEST_CASE("nielsen images") {
  Automorphism phi = nielsen(L('a'), L('b'), 2);
  CHECK(phi.apply(W("a")) == W("ab"));
  CHECK(phi.apply(W("b")) == W("b"));
  CHECK(phi.apply(W("A")) == W("BA"));
  CHECK(compose(phi, phi.inverted()) == Automorphism::identity(2));
  CHECK_THROWS_AS(nielsen(L('a'), L('a'), 2), DomainError);
  CHECK_THROWS_AS(nielsen(L('a'), L('A'), 2), DomainError);
}

TEST_CASE("nielsen with inverse letters") {
  // phi_{A,b}: a^-1 -> a^-1 b, so a -> b^-1 a.
  Automorphism phi = nielsen(L('A'), L('b'), 2);
  CHECK(phi.apply(W("A")) == W("Ab"));
  CHECK(phi.apply(W("a")) == W("Ba"));
  CHECK(compose(phi, phi.inverted()) == Automorphism::identity(2));
}

TEST_CASE("type-1 Whitehead automorphisms") {
  Automorphism t = tau(2);
  CHECK(t.apply(W("a")) == W("A"));
  CHECK(t.apply(W("b")) == W("B"));
  CHECK(compose(t, t) == Automorphism::identity(2));

  Automorphism swap_ab = whitehead_type1({2, 1}, {1, 1});
  CHECK(swap_ab.apply(W("a")) == W("b"));
  CHECK(swap_ab.apply(W("b")) == W("a"));
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(2, 1 + rng.below(14), rng);
    if (w.empty()) continue;
    CHECK(swap_ab.apply(CyclicWord(w)).length() == CyclicWord(w).length());
  }
  CHECK_THROWS_AS(whitehead_type1({1, 1}, {1, 1}), DomainError);
  CHECK_THROWS_AS(whitehead_type1({1, 3}, {1, 1}), DomainError);
  CHECK_THROWS_AS(whitehead_type1({1, 2}, {1, 2}), DomainError);
}

TEST_CASE("type-2 Whitehead automorphisms") {
  // m=b, a -> ab coincides with the Nielsen map phi_{a,b}.
  Automorphism wh = whitehead_type2(L('b'), {Type2Action::Right, Type2Action::Fix});
  CHECK(wh.forward() == nielsen(L('a'), L('b'), 2).forward());

  Automorphism conj = whitehead_type2(L('b'), {Type2Action::Conjugate, Type2Action::Fix});
  CHECK(conj.apply(W("a")) == W("Bab"));
  CHECK(conj.apply(W("b")) == W("b"));
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(2, rng.below(16), rng);
    CHECK(conj.inverted().apply(conj.apply(w)) == w);
  }

  Automorphism all_fix = whitehead_type2(L('b'), {Type2Action::Fix, Type2Action::Fix});
  CHECK(all_fix == Automorphism::identity(2));

  CHECK_THROWS_AS(whitehead_type2(L('b'), {Type2Action::Fix, Type2Action::Right}), DomainError);
}

TEST_CASE("type-2 moves invert across ranks") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int rank = static_cast<int>(2 + rng.below(4));
    Automorphism m = random_whitehead_move(rank, rng);
    CHECK(compose(m, m.inverted()) == Automorphism::identity(rank));
    CHECK(compose(m.inverted(), m) == Automorphism::identity(rank));
  }
}

TEST_CASE("apply and compose") {
  Automorphism phi = nielsen(L('a'), L('b'), 2);
  CHECK(phi.apply(CyclicWord(W("ab"))) == CyclicWord(W("abb")));
  CHECK(Automorphism::identity(2).apply(W("abAB")) == W("abAB"));

  // tau flips all signs of a cyclic word
  Rng rng(9);
  Automorphism t = tau(2);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(2, 1 + rng.below(12), rng);
    if (w.empty()) continue;
    std::vector<Letter> flipped;
    for (Letter l : w.letters()) flipped.push_back(l.inverse() /*same gen, other sign*/);
    CHECK(t.apply(CyclicWord(w)) == CyclicWord(Word(2, flipped)));
  }

  CHECK(compose(phi.forward(), phi.forward()).image(1) == W("abb"));
  CHECK(compose(Endomorphism::identity(2), phi.forward()) == phi.forward());

  // apply respects multiplication
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(2, rng.below(10), rng);
    Word v = random_word(2, rng.below(10), rng);
    CHECK(phi.apply(u * v) == phi.apply(u) * phi.apply(v));
  }
}

TEST_CASE("degenerate cyclic image is reported") {
  // a -> 1, b -> b kills a^n.
  Endomorphism e(2, {Word(2), W("b")});
  CHECK_THROWS_AS(e.apply(CyclicWord(W("aa"))), DomainError);
}

TEST_CASE("whitehead graph of the commutator is the 4-cycle") {
  WhiteheadGraph g(CyclicWord(W("abAB")));
  CHECK(g.label(L('a'), L('b')) == 1);
  CHECK(g.label(L('a'), L('B')) == 1);
  CHECK(g.label(L('A'), L('b')) == 1);
  CHECK(g.label(L('A'), L('B')) == 1);
  CHECK(g.label(L('a'), L('A')) == 0);
  CHECK(g.label(L('b'), L('B')) == 0);
  CHECK(g.label_sum() == 4);
}

TEST_CASE("rank-3 squares example separates xy^2 from x^2y") {
  CyclicWord w(W("abb", 3));   // x y^2 with (x,y) = (a,b)
  CyclicWord w2(W("aab", 3));  // x^2 y
  WhiteheadGraph g(w), g2(w2);
  CHECK(g.label(L('b'), L('B')) == 1);
  CHECK(g.label(L('a'), L('A')) == 0);
  CHECK(g2.label(L('a'), L('A')) == 1);
  CHECK(g2.label(L('b'), L('B')) == 0);
  CHECK_FALSE(graphs_equal(g, g2));
}

TEST_CASE("graphs_equal") {
  CHECK(graphs_equal(WhiteheadGraph(CyclicWord(W("abaaB"))),
                     WhiteheadGraph(CyclicWord(W("aabaB")))));
  WhiteheadGraph g(CyclicWord(W("ab")));
  CHECK(graphs_equal(g, g));
  CHECK_THROWS_AS(graphs_equal(g, WhiteheadGraph(CyclicWord(W("ab", 3)))), DomainError);
}

TEST_CASE("W(w) = W(w^-1) and label sum = cyclic length") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    int rank = static_cast<int>(2 + rng.below(3));
    Word w = random_word(rank, 1 + rng.below(20), rng);
    if (w.empty()) continue;
    CyclicWord cw(w);
    WhiteheadGraph g(cw);
    CHECK(g == WhiteheadGraph(cw.inverse()));
    CHECK(g.label_sum() == static_cast<long>(cw.length()));
  }
}

TEST_CASE("lemma 2.1 examples") {
  auto [l1, r1] = lemma1_check(CyclicWord(W("ab")), L('a'), L('b'));
  CHECK(l1 == 1);
  CHECK(r1 == 1);
  auto [l2, r2] = lemma1_check(CyclicWord(W("aB")), L('a'), L('b'));
  CHECK(l2 == -1);
  CHECK(r2 == -1);
  auto [l3, r3] = lemma1_check(CyclicWord(W("a")), L('b'), L('a'));
  CHECK(l3 == 0);
  CHECK(r3 == 0);
  CHECK_THROWS_AS(lemma1_check(CyclicWord(W("ab")), L('a'), L('A')), DomainError);
}

TEST_CASE("lemma 2.1 sweep") {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    int rank = static_cast<int>(2 + rng.below(4));
    Word w = random_word(rank, 1 + rng.below(24), rng);
    if (w.empty()) continue;
    CyclicWord cw(w);
    Letter x = random_letter(rank, rng);
    Letter y = random_letter(rank, rng);
    if (x.generator() == y.generator()) continue;
    auto [lhs, rhs] = lemma1_check(cw, x, y);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("lemma 2.2 examples") {
  CHECK(lemma2_recover_count(CyclicWord(W("ab")), 1) == Rational(1));
  CHECK(lemma2_recover_count(CyclicWord(W("aaa")), 2) == Rational(0));
  CHECK(lemma2_recover_count(CyclicWord(W("abab")), 1) == Rational(2));
  CHECK_THROWS_AS(lemma2_recover_count(CyclicWord(W("a", 1)), 1), DomainError);
}

TEST_CASE("lemma 2.2 sweep: exact integral recovery") {
  Rng rng(17);
  for (int i = 0; i < 2000; ++i) {
    int rank = static_cast<int>(2 + rng.below(4));
    Word w = random_word(rank, 1 + rng.below(24), rng);
    if (w.empty()) continue;
    CyclicWord cw(w);
    int gen = static_cast<int>(1 + rng.below(static_cast<std::uint64_t>(rank)));
    Rational r = lemma2_recover_count(cw, gen);
    CHECK(r == Rational(count_letter(cw, Letter(gen, 1))));
  }
}

TEST_CASE("degree identity: n(w;x) is the label sum at vertex x") {
  Rng rng(19);
  for (int i = 0; i < 500; ++i) {
    int rank = static_cast<int>(2 + rng.below(3));
    Word w = random_word(rank, 1 + rng.below(20), rng);
    if (w.empty()) continue;
    CyclicWord cw(w);
    WhiteheadGraph g(cw);
    Letter x = random_letter(rank, rng);
    long deg = 0;
    for (int c = 0; c < 2 * rank; ++c) {
      if (c == x.code()) continue;
      deg += g.label(x, Letter::from_code(c));
    }
    CHECK(deg == count_letter(cw, x));
  }
}

TEST_CASE("proposition 3.1: palindromic reverse commutes with rank-2 automorphisms") {
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    Word w = random_word(2, 1 + rng.below(12), rng);
    if (w.empty()) continue;
    CyclicWord cw(w);
    Automorphism phi = random_aut(2, static_cast<int>(rng.below(5)), rng);
    CHECK(phi.apply(cw).palindromic_reverse() == phi.apply(cw.palindromic_reverse()));
  }
}

TEST_CASE("substitute") {
  std::vector<Word> vals = {W("a"), W("baB")};
  CHECK(substitute(W("ab"), vals) == W("abaB"));
  CHECK(substitute(W("aB"), vals) == W("abAB"));
  CHECK(substitute(Word(2), vals).empty());
}
