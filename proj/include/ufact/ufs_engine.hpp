#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ufact/automata.hpp"
#include "ufact/oracle.hpp"
#include "ufact/report.hpp"

namespace ufact {

/// NFA for L* − ufs(L), L finite: states are 6-tuples
/// [w1, s1, v1, w2, s2, v2] tracking two factorizations in progress, where
/// s is the unread suffix of the current word w and v is the
/// characteristic bit-vector of words used so far (a word's bit is set the
/// moment it is loaded). Initial states load every pair of words; reload
/// ε-moves are composed into the letter transitions at build time; a state
/// accepts when both suffixes are empty and the vectors differ. Requires
/// ε ∉ L and |L| ≤ 64.
Nfa build_ufs_nfa(const Alphabet& alphabet, const std::vector<Word>& words);

/// DFA for ufs(L) = L* − L(build_ufs_nfa).
Dfa ufs_dfa(const Alphabet& alphabet, const std::vector<Word>& words);

struct UfsViolation {
  Word word;
  std::size_t bound;  // 2·m²·n² for n = |L|, m = longest word length
};

/// Shortest word of L* lacking subset-invariant factorization, if any;
/// asserts the 2m²n² length bound on a found witness.
std::optional<UfsViolation> shortest_ufs_violation(const Alphabet& alphabet,
                                                   const std::vector<Word>& words);

/// Desk-scale confirmation for the regular language
/// (ab)+(ac)+aa + (ba)+(ca)+ + aa + aaa: a word aa(ab)^r(ac)^s aa
/// (ba)^t(ca)^q aaa is subset-invariant iff r=t and s=q.
CheckReport ufs_regular_witness_check(int r_max);

}  // namespace ufact
