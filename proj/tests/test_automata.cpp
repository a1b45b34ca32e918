#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ufact/automata.hpp"
#include "ufact/oracle.hpp"
#include "ufact/regex.hpp"

using namespace ufact;
using testing::brute_slice;
using testing::word_set;

namespace {
const Alphabet kAB({"a", "b"});
}

TEST_CASE("regex: star of a single letter") {
  Nfa nfa = compile_regex("a*", Alphabet({"a"}));
  CHECK(nfa.accepts(Word{}));
  CHECK(nfa.accepts(Word{0}));
  CHECK(nfa.accepts(Word(5, 0)));
}

TEST_CASE("regex: union of two starred branches, slice hand-checked") {
  Nfa nfa = compile_regex("b(aa)*|(aaa)*b", kAB);
  auto slice = enumerate_slice(nfa, 6);
  std::vector<Word> expected{kAB.word("b"), kAB.word("baa"), kAB.word("aaab"), kAB.word("baaaa")};
  CHECK(word_set(slice) == word_set(expected));
}

TEST_CASE("regex: parse and symbol errors carry positions") {
  CHECK_THROWS_AS(compile_regex("a|", Alphabet({"a"})), ParseError);
  CHECK_THROWS_AS(compile_regex("(a", Alphabet({"a"})), ParseError);
  CHECK_THROWS_AS(compile_regex("", Alphabet({"a"})), ParseError);
  try {
    compile_regex("aa|b", Alphabet({"a"}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownSymbol);
  }
}

TEST_CASE("regex: multi-character tokens match longest-first") {
  Alphabet sigma({"a", "a1", "b"});
  Nfa nfa = compile_regex("a1 a|b", sigma);
  CHECK(nfa.accepts(sigma.word({"a1", "a"})));
  CHECK(!nfa.accepts(sigma.word({"a", "a"})));
  CHECK(nfa.accepts(sigma.word({"b"})));
}

TEST_CASE("determinize/minimize/product/complement preserve slices on random NFAs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Nfa nfa = testing::random_nfa(rng, 4, 2);
    auto expected = word_set(brute_slice(nfa, 8));
    Dfa det = determinize(nfa);
    CHECK(word_set(brute_slice(det, 8)) == expected);
    Dfa min = minimize(det);
    CHECK(word_set(brute_slice(min, 8)) == expected);
    CHECK(word_set(enumerate_slice(min, 8)) == expected);

    Dfa other = testing::random_dfa(rng, 4, 2, true);
    Dfa both = product(min, other, [](bool x, bool y) { return x && y; });
    auto expect_and = word_set(brute_slice(both, 6));
    std::set<Word> manual;
    for (const Word& w : brute_slice(min, 6))
      if (other.accepts(w)) manual.insert(w);
    CHECK(expect_and == manual);

    Dfa diff = complement_within(min, other);
    std::set<Word> expect_diff;
    for (const Word& w : brute_slice(other, 6))
      if (!min.accepts(w)) expect_diff.insert(w);
    CHECK(word_set(brute_slice(diff, 6)) == expect_diff);
  }
}

TEST_CASE("minimize: empty language collapses to one state") {
  Dfa d = minimize(empty_dfa(kAB));
  CHECK(d.state_count() == 1);
  CHECK(!d.accepting[0]);
}

TEST_CASE("minimize is idempotent and never grows") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Dfa d = testing::random_dfa(rng, 5, 2, true);
    Dfa once = minimize(d);
    Dfa twice = minimize(once);
    CHECK(once.state_count() <= d.state_count());
    CHECK(twice.state_count() == once.state_count());
    CHECK(equivalent(once, twice).equivalent);
  }
}

TEST_CASE("product: xor of a language with itself is empty") {
  std::mt19937 rng(3);
  Dfa a = testing::random_dfa(rng, 4, 2, true);
  Dfa x = product(a, a, [](bool p, bool q) { return p != q; });
  CHECK(!shortest_accepted(x).has_value());
}

TEST_CASE("product: disjoint languages intersect to the empty language") {
  Dfa astar = minimize(determinize(compile_regex("a*", kAB)));
  Dfa bab = minimize(determinize(compile_regex("ba*b", kAB)));
  Dfa meet = product(astar, bab, [](bool p, bool q) { return p && q; });
  CHECK(!shortest_accepted(meet).has_value());
}

TEST_CASE("product rejects mismatched alphabets") {
  Dfa a = empty_dfa(kAB);
  Dfa b = empty_dfa(Alphabet({"a"}));
  CHECK_THROWS_AS(product(a, b, [](bool, bool) { return true; }), Error);
}

TEST_CASE("complement_within endpoints") {
  Dfa universe = minimize(determinize(compile_regex("(a|b)(a|b)*", kAB)));
  Dfa empty = empty_dfa(kAB);
  CHECK(equivalent(complement_within(empty, universe), universe).equivalent);
  CHECK(!shortest_accepted(complement_within(universe, universe)).has_value());
}

TEST_CASE("star_nfa: singleton code gives (ab)*") {
  Dfa d = dfa_from_words(kAB, {kAB.word("ab")});
  Nfa star = star_nfa(d);
  Dfa expected = minimize(determinize(compile_regex("(ab)*", kAB)));
  CHECK(equivalent(minimize(determinize(star)), expected).equivalent);
}

TEST_CASE("star_nfa agrees with the segmentation DP") {
  std::vector<Word> words{kAB.word("a"), kAB.word("ab"), kAB.word("aab")};
  Dfa d = dfa_from_words(kAB, words);
  Nfa star = star_nfa(d);
  MembershipOracle L = oracle_from_words(words);
  for (const Word& w : brute_slice(star, 6)) CHECK(in_star(w, L));
  auto slice = enumerate_slice(star, 6);
  std::size_t dp_count = 0;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len <= 6; ++len) {
    for (const Word& w : layer)
      if (in_star(w, L)) ++dp_count;
    if (len == 6) break;
    std::vector<Word> next;
    for (const Word& w : layer)
      for (Symbol s = 0; s < 2; ++s) {
        Word v = w;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  CHECK(slice.size() == dp_count);
}

TEST_CASE("star_nfa: initial state must not wrongly absorb words ending at it") {
  // L = b*ab has a self-loop on its initial state; b ∉ L*.
  Dfa d = minimize(determinize(compile_regex("b*ab", kAB)));
  Nfa star = star_nfa(d);
  CHECK(!star.accepts(kAB.word("b")));
  CHECK(star.accepts(Word{}));
  CHECK(star.accepts(kAB.word("ab")));
  CHECK(star.accepts(kAB.word("babbab")));
}

TEST_CASE("star_nfa rejects languages containing epsilon") {
  Dfa d = minimize(determinize(compile_regex("a*", kAB)));
  CHECK_THROWS_AS(star_nfa(d), Error);
}

TEST_CASE("shortest_accepted basics") {
  CHECK(!shortest_accepted(empty_dfa(kAB)).has_value());
  Dfa d = minimize(determinize(compile_regex("a*b", kAB)));
  auto w = shortest_accepted(d);
  REQUIRE(w.has_value());
  CHECK(*w == kAB.word("b"));
}

TEST_CASE("shortest_accepted returns the length-lex-least word") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Nfa nfa = testing::random_nfa(rng, 4, 2);
    auto w = shortest_accepted(nfa);
    auto slice = brute_slice(nfa, 6);
    if (slice.empty()) {
      if (w) CHECK(w->size() > 6);
      continue;
    }
    std::sort(slice.begin(), slice.end(), length_lex_less);
    REQUIRE(w.has_value());
    CHECK(*w == slice.front());
  }
}

TEST_CASE("equivalent: reflexive after minimize, counterexample otherwise") {
  std::mt19937 rng(15);
  Dfa x = testing::random_dfa(rng, 4, 2, true);
  CHECK(equivalent(minimize(x), x).equivalent);

  Dfa a = dfa_from_words(kAB, {kAB.word("a")});
  Dfa aa = dfa_from_words(kAB, {kAB.word("aa")});
  EquivalenceResult eq = equivalent(a, aa);
  CHECK(!eq.equivalent);
  CHECK(*eq.counterexample == kAB.word("a"));
}

TEST_CASE("enumerate_slice: (ab)*a* up to length 3") {
  Dfa d = minimize(determinize(compile_regex("(ab)*a*", kAB)));
  auto slice = enumerate_slice(d, 3);
  std::vector<Word> expected{Word{},          kAB.word("a"),  kAB.word("aa"),
                             kAB.word("ab"),  kAB.word("aaa"), kAB.word("aba")};
  CHECK(slice == expected);  // length-then-lex order
}

TEST_CASE("enumerate_slice: empty language and cap overflow") {
  CHECK(enumerate_slice(empty_dfa(kAB), 10).empty());
  Dfa all = minimize(determinize(compile_regex("(a|b)*", kAB)));
  CHECK_THROWS_AS(enumerate_slice(all, 10, 5), Error);
}

TEST_CASE("dfa_from_words matches brute membership") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto words = testing::random_words(rng, kAB, 4, 4);
    Dfa d = dfa_from_words(kAB, words);
    auto expected = word_set(words);
    CHECK(word_set(enumerate_slice(d, 5)) == expected);
  }
}
