#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ufact/oracle.hpp"

using namespace ufact;
using testing::word_set;

namespace {
const Alphabet kAB({"a", "b"});

std::vector<Word> aab_words() { return {kAB.word("a"), kAB.word("ab"), kAB.word("aab")}; }
}  // namespace

TEST_CASE("factorizations: aab over {a,ab,aab}") {
  MembershipOracle L = oracle_from_words(aab_words());
  auto facts = factorizations(kAB.word("aab"), L);
  REQUIRE(facts.size() == 2);
  std::set<std::vector<Word>> seqs;
  for (const auto& f : facts) {
    CHECK(concat(f) == kAB.word("aab"));
    seqs.insert(f.factors);
  }
  std::set<std::vector<Word>> expected{{kAB.word("aab")}, {kAB.word("a"), kAB.word("ab")}};
  CHECK(seqs == expected);
}

TEST_CASE("factorizations: epsilon has no representable factorization") {
  MembershipOracle L = oracle_from_words(aab_words());
  CHECK(factorizations(Word{}, L).empty());
  CHECK(count_factorizations(Word{}, L) == 1);  // the empty factorization
}

TEST_CASE("factorizations reject languages containing epsilon") {
  MembershipOracle L = oracle_from_words({Word{}, kAB.word("a")});
  CHECK_THROWS_AS(factorizations(kAB.word("a"), L), Error);
}

TEST_CASE("factorizations: prop3-style word has exactly the two paper splits") {
  // L2 = b(a²)* ∪ (a³)*b; b a⁶ b factors as (ba⁶)(b) and (b)(a⁶b).
  std::vector<Word> words;
  for (int i = 0; i <= 4; ++i) {
    Word w = kAB.word("b");
    w.insert(w.end(), static_cast<std::size_t>(2 * i), kAB.require("a"));
    words.push_back(w);
    Word v(static_cast<std::size_t>(3 * i), kAB.require("a"));
    v.push_back(kAB.require("b"));
    words.push_back(v);
  }
  MembershipOracle L = oracle_from_words(words);
  Word target = kAB.word("baaaaaab");
  auto facts = factorizations(target, L);
  REQUIRE(facts.size() == 2);
  for (const auto& f : facts) CHECK(f.factors.size() == 2);
}

TEST_CASE("count_factorizations saturates and matches enumeration") {
  MembershipOracle L = oracle_from_words(aab_words());
  CHECK(count_factorizations(kAB.word("aba"), L) == 1);
  CHECK(count_factorizations(kAB.word("aab"), L) == 2);
  CHECK(count_factorizations(kAB.word("b"), oracle_from_words({})) == 0);

  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    auto words = testing::random_words(rng, kAB, 4, 3);
    MembershipOracle M = oracle_from_words(words);
    FactorLanguage FL = factor_language(kAB, words);
    for (const Word& x : star_slice(FL, 7)) {
      if (x.empty()) continue;
      auto facts = factorizations(x, M);
      CHECK(count_factorizations(x, M, 1'000'000) == facts.size());
    }
  }
}

TEST_CASE("cap errors carry the partial count") {
  MembershipOracle L = oracle_from_words({kAB.word("a"), kAB.word("aa")});
  try {
    factorizations(Word(12, kAB.require("a")), L, 5);
    CHECK(false);
  } catch (const CapExceededError& e) {
    CHECK(e.partial_count() == 5);
  }
}

TEST_CASE("predicates on the paper examples") {
  MembershipOracle L = oracle_from_words(aab_words());
  Word aab = kAB.word("aab");
  CHECK(!is_uf(aab, L));
  CHECK(!is_su(aab, L));
  CHECK(!is_ufs(aab, L));  // supports {aab} vs {a,ab}

  Alphabet unary({"a"});
  MembershipOracle A = oracle_from_words({Word(3, 0), Word(4, 0)});
  CHECK(!is_ufp(Word(12, 0), A));  // 4×a³ vs 3×a⁴
  CHECK(is_ufp(Word(17, 0), A));

  MembershipOracle Aa = oracle_from_words({kAB.word("a"), kAB.word("aa")});
  CHECK(!is_ufs(kAB.word("aa"), Aa));  // supports {a} vs {aa}
}

TEST_CASE("predicates treat epsilon as vacuously unique") {
  MembershipOracle L = oracle_from_words(aab_words());
  CHECK(is_uf(Word{}, L));
  CHECK(is_su(Word{}, L));
  CHECK(is_ufp(Word{}, L));
  CHECK(is_ufs(Word{}, L));
}

TEST_CASE("predicates raise on words outside L*") {
  MembershipOracle L = oracle_from_words(aab_words());
  Word outside = kAB.word("ba");
  CHECK_THROWS_AS(is_uf(outside, L), Error);
  CHECK_THROWS_AS(is_su(outside, L), Error);
  CHECK_THROWS_AS(is_ufp(outside, L), Error);
  CHECK_THROWS_AS(is_ufs(outside, L), Error);
}

TEST_CASE("slice_by_predicate: su example equals (ab)*a* and ufp example 2") {
  FactorLanguage L = factor_language(kAB, aab_words());
  auto su6 = slice_by_predicate(L, FactorPredicate::Su, 6);
  // (ab)*a* restricted to length ≤ 6, derived by hand.
  std::set<Word> expected;
  for (int reps = 0; reps * 2 <= 6; ++reps)
    for (int tail = 0; 2 * reps + tail <= 6; ++tail) {
      Word w;
      for (int i = 0; i < reps; ++i) {
        w.push_back(kAB.require("a"));
        w.push_back(kAB.require("b"));
      }
      w.insert(w.end(), static_cast<std::size_t>(tail), kAB.require("a"));
      expected.insert(w);
    }
  CHECK(word_set(su6) == expected);

  Alphabet unary({"a"});
  FactorLanguage A = factor_language(unary, {Word(3, 0), Word(4, 0)});
  auto ufp17 = slice_by_predicate(A, FactorPredicate::Ufp, 17);
  std::set<Word> example2{Word{}};
  for (int k : {3, 4, 6, 7, 8, 9, 10, 11, 13, 14, 17}) example2.insert(Word(static_cast<std::size_t>(k), 0));
  CHECK(word_set(ufp17) == example2);
}

TEST_CASE("prefix codes keep the whole star slice under uf") {
  FactorLanguage L = factor_language(kAB, {kAB.word("a"), kAB.word("ba")});
  auto star = star_slice(L, 7);
  auto uf = slice_by_predicate(L, FactorPredicate::Uf, 7);
  CHECK(star == uf);
  CHECK(!shortest_violation(L, FactorPredicate::Uf, 10).has_value());
}

TEST_CASE("shortest_violation examples") {
  FactorLanguage L = factor_language(kAB, {kAB.word("a"), kAB.word("aa")});
  auto v = shortest_violation(L, FactorPredicate::Su, 4);
  REQUIRE(v.has_value());
  CHECK(*v == kAB.word("aa"));
}

TEST_CASE("implication chain uf ⇒ ufp ⇒ su and ufp ⇒ ufs, exhaustively") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    auto words = testing::random_words(rng, kAB, 4, 3);
    FactorLanguage L = factor_language(kAB, words);
    for (const Word& x : star_slice(L, 8)) {
      bool uf = is_uf(x, L.membership);
      bool ufp = is_ufp(x, L.membership);
      bool su = is_su(x, L.membership);
      bool ufs = is_ufs(x, L.membership);
      CHECK(!(uf && !ufp));
      CHECK(!(ufp && !su));
      CHECK(!(ufp && !ufs));
    }
  }
}

TEST_CASE("factor language carriers agree: finite words vs their DFA") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    auto words = testing::random_words(rng, kAB, 4, 3);
    FactorLanguage by_words = factor_language(kAB, words);
    FactorLanguage by_dfa = factor_language(dfa_from_words(kAB, words));
    CHECK(star_slice(by_words, 7) == star_slice(by_dfa, 7));
    for (const Word& x : star_slice(by_words, 6))
      CHECK(count_factorizations(x, by_words.membership, 64) ==
            count_factorizations(x, by_dfa.membership, 64));
  }
}
