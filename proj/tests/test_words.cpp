#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "treq/cyclic_word.hpp"
#include "treq/errors.hpp"
#include "treq/random_words.hpp"
#include "treq/rng.hpp"
#include "treq/word.hpp"

using namespace treq;

namespace {

Letter L(char c) {
  int gen = std::tolower(c) - 'a' + 1;
  return Letter(gen, std::islower(c) ? 1 : -1);
}

Word W(const std::string& s, int rank = 2) { return Word::parse(s, rank); }

}  // namespace

TEST_CASE("parse: compact and exponent formats") {
  CHECK(W("abBA").empty());
  CHECK(W("aba").length() == 3);
  CHECK(W("aba").str() == "aba");
  CHECK(W("a^2*B").str() == "aaB");
  CHECK(W("a^2*B").length() == 3);
  CHECK(W("a^-3", 1).str() == "AAA");
  CHECK(W("1").empty());
  CHECK(W("").empty());
  CHECK(W("b^0").empty());

  CHECK_THROWS_AS(W("ax"), ParseError);          // beyond rank
  CHECK_THROWS_AS(W("a2"), ParseError);          // unknown letter
  CHECK_THROWS_AS(W("a^"), ParseError);          // malformed exponent
  CHECK_THROWS_AS(W("a^-"), ParseError);
  CHECK_THROWS_AS(W("c", 2), ParseError);
}

TEST_CASE("free reduction") {
  CHECK(Word(2, {L('a'), L('b'), L('B'), L('a')}) == W("aa"));
  CHECK(Word(2, {}).empty());
  CHECK(Word(2, {L('a'), L('A'), L('a'), L('A')}).empty());
}

TEST_CASE("free reduction is confluent under random inverse-pair insertion") {
  Rng rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    int rank = static_cast<int>(2 + rng.below(3));
    Word w = random_word(rank, rng.below(12), rng);
    std::vector<Letter> padded(w.letters().begin(), w.letters().end());
    for (int ins = 0; ins < 6; ++ins) {
      std::size_t pos = rng.below(padded.size() + 1);
      Letter l = random_letter(rank, rng);
      padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(pos), {l, l.inverse()});
    }
    CHECK(Word(rank, padded) == w);
  }
}

TEST_CASE("multiply and invert") {
  CHECK(W("ab") * W("Ba") == W("aa"));
  CHECK(W("aB").inverse() == W("bA"));
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(2, rng.below(20), rng);
    CHECK((w * w.inverse()).empty());
  }
  CHECK_THROWS_AS(W("a", 2) * W("a", 3), DomainError);
}

TEST_CASE("pow") {
  CHECK(W("ab").pow(3) == W("ababab"));
  CHECK(W("ab").pow(-2) == W("BABA"));
  CHECK(W("ab").pow(0).empty());
  CHECK(W("aba").pow(2) == W("abaaba"));
}

TEST_CASE("cyclic_reduce") {
  auto [c1, u1] = CyclicWord::reduce(W("baB"));
  CHECK(c1 == W("b"));
  CHECK(u1.word() == W("a"));

  auto [c2, u2] = CyclicWord::reduce(W("abaBA"));
  CHECK(c2 == W("ab"));
  CHECK(u2.word() == W("a"));

  auto [c3, u3] = CyclicWord::reduce(W("ab"));
  CHECK(c3.empty());
  CHECK(u3.word() == W("ab"));

  CHECK_THROWS_AS(CyclicWord::reduce(W("1")), DomainError);
  CHECK_THROWS_AS(CyclicWord(W("aA")), DomainError);
}

TEST_CASE("cyclic_reduce factorization law on random words") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    int rank = static_cast<int>(2 + rng.below(3));
    Word w = random_word(rank, 1 + rng.below(16), rng);
    if (w.empty()) continue;
    auto [c, u] = CyclicWord::reduce(w);
    CHECK(c * u.word() * c.inverse() == w);
    CHECK(u.length() <= w.length());
  }
}

TEST_CASE("canonical rotation is minimal and rotation-invariant") {
  // Booth against brute force.
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    int rank = static_cast<int>(2 + rng.below(2));
    Word w = random_cyclically_reduced_word(rank, 1 + rng.below(14), rng);
    const auto& ls = w.letters();
    std::size_t booth = least_rotation_index(ls);
    std::vector<Letter> best(ls.begin(), ls.end());
    std::size_t best_r = 0;
    std::vector<Letter> cur = best;
    for (std::size_t r = 1; r < ls.size(); ++r) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end())) {
        best = cur;
        best_r = r;
      }
    }
    std::vector<Letter> via_booth(ls.begin(), ls.end());
    std::rotate(via_booth.begin(), via_booth.begin() + static_cast<std::ptrdiff_t>(booth),
                via_booth.end());
    CHECK(via_booth == best);
    (void)best_r;

    // canonical(rotate(u, m)) == canonical(u)
    CyclicWord canon(w);
    std::vector<Letter> rot(ls.begin(), ls.end());
    std::size_t m = rng.below(ls.size());
    std::rotate(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(m), rot.end());
    CHECK(CyclicWord(Word(rank, rot)) == canon);
  }
}

TEST_CASE("letter order drives the canonical form") {
  // a < a^-1 < b < b^-1
  CHECK(L('a') < L('A'));
  CHECK(L('A') < L('b'));
  CHECK(L('b') < L('B'));
  CHECK(CyclicWord(W("ba")).str() == "ab");
  CHECK(CyclicWord(W("bA")).str() == "Ab");
}

TEST_CASE("palindromic reverse") {
  CHECK(palindromic_reverse(W("aab")) == W("baa"));
  CHECK(palindromic_reverse(W("aB")) == W("Ba"));
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    int rank = static_cast<int>(2 + rng.below(3));
    Word w = random_word(rank, rng.below(16), rng);
    CHECK(palindromic_reverse(palindromic_reverse(w)) == w);
  }
}

TEST_CASE("cyclic length vs length") {
  Rng rng(19);
  for (int i = 0; i < 500; ++i) {
    Word w = random_word(2, 1 + rng.below(16), rng);
    if (w.empty()) continue;
    auto [c, u] = CyclicWord::reduce(w);
    CHECK(u.length() <= w.length());
    bool cyc_reduced = (w.length() < 2) || (w[0] != w[w.length() - 1].inverse());
    CHECK((u.length() == w.length()) == cyc_reduced);
  }
}

TEST_CASE("count_letter") {
  CHECK(count_letter(CyclicWord(W("abaB")), L('a')) == 2);
  CHECK(count_letter(CyclicWord(W("ab")), L('b')) == 1);
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    int rank = static_cast<int>(2 + rng.below(3));
    Word w = random_word(rank, 1 + rng.below(20), rng);
    if (w.empty()) continue;
    CyclicWord cw(w);
    Letter x = random_letter(rank, rng);
    long n = count_letter(cw, x);
    CHECK(n == count_letter(cw, x.inverse()));
    CHECK(n == count_letter(cw.inverse(), x));
  }
}

TEST_CASE("sum of letter counts equals cyclic length") {
  Rng rng(29);
  for (int i = 0; i < 500; ++i) {
    int rank = static_cast<int>(2 + rng.below(4));
    Word w = random_word(rank, 1 + rng.below(24), rng);
    if (w.empty()) continue;
    CyclicWord cw(w);
    long total = 0;
    for (int g = 1; g <= rank; ++g) total += count_letter(cw, Letter(g, 1));
    CHECK(total == static_cast<long>(cw.length()));
  }
}

TEST_CASE("count_pair") {
  CHECK(count_pair(CyclicWord(W("ab")), L('a'), L('b')) == 1);
  CHECK(count_pair(CyclicWord(W("ab")), L('a'), L('B')) == 0);
  CHECK(count_pair(CyclicWord(W("abab")), L('a'), L('b')) == 2);
  // length-one cyclic words pair with themselves
  CHECK(count_pair(CyclicWord(W("a")), L('a'), L('a')) == 1);

  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    int rank = static_cast<int>(2 + rng.below(3));
    Word w = random_word(rank, 1 + rng.below(20), rng);
    if (w.empty()) continue;
    CyclicWord cw(w);
    Letter x = random_letter(rank, rng), y = random_letter(rank, rng);
    long n = count_pair(cw, x, y);
    CHECK(n == count_pair(cw, y.inverse(), x.inverse()));
    CHECK(n == count_pair(cw.inverse(), x, y));
  }
}

TEST_CASE("count_subword reproduces the length-three comparison") {
  Word v = W("Bab");
  CHECK(count_subword(CyclicWord(W("abaaB")), v) == 1);
  CHECK(count_subword(CyclicWord(W("aabaB")), v) == 0);
  CHECK(count_subword(CyclicWord(W("ab")), W("a")) == 1);
  CHECK_THROWS_AS(count_subword(CyclicWord(W("ab")), W("1")), DomainError);
}

TEST_CASE("count_subword wraps around short periods") {
  // aa has cyclic period 2; aaa occurs at both starting positions of the
  // periodic word aaaa...
  CHECK(count_subword(CyclicWord(W("aa")), W("aaa")) == 2);
  CHECK(count_subword(CyclicWord(W("ab")), W("abab")) == 1);
}

TEST_CASE("abelianize and conjugate_equal") {
  CHECK(abelianize(W("abaaB")) == AbelianVector{3, 0});
  CHECK(conjugate_equal(W("baB"), W("a")));
  CHECK_FALSE(conjugate_equal(W("ab"), W("bA")));
  CHECK(abelianize(W("ab")) == AbelianVector{1, 1});
  CHECK(abelianize(W("bA")) == AbelianVector{-1, 1});
  CHECK_THROWS_AS(conjugate_equal(W("1"), W("a")), DomainError);

  Rng rng(37);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(2, 1 + rng.below(12), rng);
    Word c = random_word(2, rng.below(6), rng);
    if (w.empty()) continue;
    CHECK(conjugate_equal(c * w * c.inverse(), w));
    CHECK(abelianize(c * w * c.inverse()) == abelianize(w));
  }
}

TEST_CASE("palindromic reverse agrees with inverted-substitution definition") {
  Rng rng(41);
  for (int i = 0; i < 400; ++i) {
    int rank = static_cast<int>(2 + rng.below(3));
    Word w = random_word(rank, rng.below(14), rng);
    std::vector<Letter> sub;
    for (Letter l : w.letters()) sub.push_back(l.inverse());
    // w(a_1^-1, ..., a_k^-1) then invert
    Word substituted(rank, sub);
    CHECK(palindromic_reverse(w) == substituted.inverse());
  }
}

TEST_CASE("json-style round trip through text") {
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    int rank = static_cast<int>(2 + rng.below(3));
    Word w = random_word(rank, rng.below(18), rng);
    CHECK(Word::parse(w.str(), rank) == w);
  }
}
