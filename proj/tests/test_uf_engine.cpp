#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ufact/families.hpp"
#include "ufact/language_spec.hpp"
#include "ufact/oracle.hpp"
#include "ufact/regex.hpp"
#include "ufact/uf_engine.hpp"

using namespace ufact;
using testing::word_set;

namespace {
const Alphabet kAB({"a", "b"});
}

TEST_CASE("double NFA has exactly n + n² states") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    Dfa m = testing::random_dfa(rng, 4, 2);
    int n = m.state_count();
    CHECK(build_double_nfa(m).state_count() == n + n * n);
  }
}

TEST_CASE("double NFA of a prefix code accepts nothing") {
  Dfa m = dfa_from_words(kAB, {kAB.word("a"), kAB.word("ba")});
  CHECK(!shortest_accepted(build_double_nfa(m)).has_value());
}

TEST_CASE("double NFA: shortest ambiguous word of {a,ab,aab} is aab") {
  Dfa m = dfa_from_words(kAB, {kAB.word("a"), kAB.word("ab"), kAB.word("aab")});
  auto w = shortest_accepted(build_double_nfa(m));
  REQUIRE(w.has_value());
  CHECK(*w == kAB.word("aab"));
}

TEST_CASE("double NFA splits may come after a factor with a shorter prefix in L") {
  // aabcc = (aab)(c)(c) = (aab)(cc); the shared factor aab has the proper
  // prefix aa ∈ L, so the split must be available past it.
  Alphabet sigma({"a", "b", "c"});
  Dfa m = dfa_from_words(sigma, {sigma.word("aa"), sigma.word("aab"), sigma.word("c"),
                                 sigma.word("cc")});
  Nfa doubled = build_double_nfa(m);
  CHECK(doubled.accepts(sigma.word("aabcc")));
  MembershipOracle L = oracle_from_words({sigma.word("aa"), sigma.word("aab"), sigma.word("c"),
                                          sigma.word("cc")});
  CHECK(count_factorizations(sigma.word("aabcc"), L) == 2);
}

TEST_CASE("double NFA equals the multi-factorization oracle on random DFAs") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    Dfa m = testing::random_dfa(rng, 4, 2);
    FactorLanguage L = factor_language(m);
    std::set<Word> expected;
    for (const Word& x : star_slice(L, 8))
      if (count_factorizations(x, L.membership, 2) >= 2) expected.insert(x);
    CHECK(word_set(enumerate_slice(build_double_nfa(m), 8)) == expected);
  }
}

TEST_CASE("uf_dfa: slice equality, epsilon case, singleton code") {
  Dfa m = dfa_from_words(kAB, {kAB.word("a"), kAB.word("ab"), kAB.word("aab")});
  FactorLanguage L = factor_language(m);
  CHECK(word_set(enumerate_slice(uf_dfa(m), 8)) ==
        word_set(slice_by_predicate(L, FactorPredicate::Uf, 8)));

  Dfa with_eps = minimize(determinize(compile_regex("a*", kAB)));
  CHECK(!shortest_accepted(uf_dfa(with_eps)).has_value());

  Dfa ab = dfa_from_words(kAB, {kAB.word("ab")});
  Dfa expected = minimize(determinize(compile_regex("(ab)*", kAB)));
  CHECK(equivalent(uf_dfa(ab), expected).equivalent);
}

TEST_CASE("partition: L(M') and uf(L) split L* exactly") {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    Dfa m = testing::random_dfa(rng, 4, 2);
    Dfa ambiguous = minimize(determinize(build_double_nfa(m)));
    Dfa uf = uf_dfa(m);
    Dfa star = minimize(determinize(star_nfa(m)));
    Dfa meet = product(ambiguous, uf, [](bool p, bool q) { return p && q; });
    CHECK(!shortest_accepted(meet).has_value());
    Dfa join = product(ambiguous, uf, [](bool p, bool q) { return p || q; });
    CHECK(equivalent(join, star).equivalent);
  }
}

TEST_CASE("matrix construction: tiny languages") {
  Alphabet unary({"a"});
  Dfa single = dfa_from_words(unary, {unary.word("a")});
  Dfa md = matrix_uf_dfa(single);
  CHECK(md.accepts(Word{}));
  for (int k = 1; k <= 6; ++k) CHECK(md.accepts(Word(static_cast<std::size_t>(k), 0)));

  Dfa two = dfa_from_words(unary, {unary.word("a"), unary.word("aa")});
  Dfa md2 = matrix_uf_dfa(two);
  CHECK(md2.accepts(Word(1, 0)));
  CHECK(!md2.accepts(Word(2, 0)));  // (a)(a) vs (aa)
}

TEST_CASE("matrix construction agrees with the doubled-state route") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    Dfa m = testing::random_dfa(rng, 3, 2);
    CHECK(equivalent(uf_dfa(m), matrix_uf_dfa(m)).equivalent);
  }
}

TEST_CASE("matrix construction respects its cap") {
  FamilyInstance fam = prop5_family(4);
  Dfa m = spec_dfa(fam.language);
  CHECK_THROWS_AS(matrix_uf_dfa(m, 3), Error);
}

TEST_CASE("is_code: witnesses and the n²+n bound") {
  CHECK(is_code(dfa_from_words(kAB, {kAB.word("a"), kAB.word("ba")})).code);

  Dfa p3 = spec_dfa(prop3_family(4).language);
  CodeCheck c3 = is_code(p3);
  REQUIRE(!c3.code);
  CHECK(c3.witness->size() == 22);  // b a²⁰ b
  CHECK(*c3.witness == prop3_ambiguous_word(4));

  FamilyInstance p5 = prop5_family(4);
  CodeCheck c5 = is_code(spec_dfa(p5.language));
  REQUIRE(!c5.code);
  CHECK(c5.witness->size() == 10);

  std::mt19937 rng(89);
  for (int trial = 0; trial < 60; ++trial) {
    Dfa m = testing::random_dfa(rng, 4, 2);
    CodeCheck check = is_code(m);
    if (!check.code) {
      std::size_t n = static_cast<std::size_t>(m.state_count());
      CHECK(check.witness->size() < n * n + n);
      MembershipOracle L = oracle_from_dfa(m);
      CHECK(count_factorizations(*check.witness, L, 2) >= 2);
    }
  }
}

TEST_CASE("palstar analysis on the tiny examples") {
  CheckReport r8 = palstar_uf_check(8);
  CHECK(r8.passed);
}
