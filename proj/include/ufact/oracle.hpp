#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ufact/automata.hpp"
#include "ufact/words.hpp"

namespace ufact {

inline constexpr std::uint64_t kDefaultFactorizationCap = 1'000'000;

/// Uniform membership carrier for factor languages (finite sets and
/// DFA-backed languages alike).
struct MembershipOracle {
  std::function<bool(const Word&)> test;
  std::string description;
};

MembershipOracle oracle_from_words(const std::vector<Word>& words,
                                   const std::string& description = "finite language");
MembershipOracle oracle_from_dfa(const Dfa& dfa,
                                 const std::string& description = "dfa language");

/// A word of L* split into L-factors; factors are non-empty and concatenate
/// to the target word.
struct Factorization {
  std::vector<Word> factors;
};

using FactorMultiset = std::map<Word, std::uint64_t>;

FactorMultiset multiset_of(const Factorization& f);
std::set<Word> support_of(const Factorization& f);
Word concat(const Factorization& f);

/// Enumerates factorizations of x into L-words by segmentation DP over the
/// O(|x|^2) substrings; `visit` may return false to stop early. Returns
/// false iff stopped by the visitor. Requires ε ∉ L.
bool for_each_factorization(const Word& x, const MembershipOracle& L,
                            const std::function<bool(const Factorization&)>& visit);

/// All factorizations of x into L-words; empty iff x ∉ L+ (the empty word
/// has no representable factorization). Throws CapExceededError past `cap`.
std::vector<Factorization> factorizations(const Word& x, const MembershipOracle& L,
                                          std::uint64_t cap = kDefaultFactorizationCap);

/// Number of distinct factorizations, saturated at `saturate_at`.
/// count_factorizations(ε) is 1: the empty factorization.
std::uint64_t count_factorizations(const Word& x, const MembershipOracle& L,
                                   std::uint64_t saturate_at = 2);

bool in_star(const Word& x, const MembershipOracle& L);

enum class FactorPredicate { Uf, Su, Ufp, Ufs };

std::string predicate_name(FactorPredicate p);
std::optional<FactorPredicate> predicate_from_name(const std::string& name);

/// Definition-level predicates. ε is vacuously unique for all four.
/// Throw a NotInStar error when x has no factorization at all.
bool is_uf(const Word& x, const MembershipOracle& L);
bool is_su(const Word& x, const MembershipOracle& L);
bool is_ufp(const Word& x, const MembershipOracle& L);
bool is_ufs(const Word& x, const MembershipOracle& L);
bool holds(FactorPredicate p, const Word& x, const MembershipOracle& L);

/// Factor language with enough structure to enumerate its star slice:
/// either a finite word set or a DFA, plus the membership oracle.
struct FactorLanguage {
  Alphabet alphabet;
  MembershipOracle membership;
  std::function<std::vector<Word>(std::size_t max_len, std::size_t cap)> star_slice;
};

FactorLanguage factor_language(const Alphabet& alphabet, std::vector<Word> words,
                               const std::string& description = "finite language");
FactorLanguage factor_language(const Dfa& dfa, const std::string& description = "dfa language");

/// {x ∈ L* : |x| ≤ max_len}, length-then-lex. Requires ε ∉ L.
std::vector<Word> star_slice(const FactorLanguage& L, std::size_t max_len,
                             std::size_t cap = kDefaultSliceCap);

/// {x ∈ L* : |x| ≤ max_len and the predicate holds}, length-then-lex.
std::vector<Word> slice_by_predicate(const FactorLanguage& L, FactorPredicate p,
                                     std::size_t max_len, std::size_t cap = kDefaultSliceCap);

/// Shortest x ∈ L* with |x| ≤ max_len failing the predicate, if any.
std::optional<Word> shortest_violation(const FactorLanguage& L, FactorPredicate p,
                                       std::size_t max_len, std::size_t cap = kDefaultSliceCap);

}  // namespace ufact
