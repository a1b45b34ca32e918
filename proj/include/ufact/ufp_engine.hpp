#pragma once

#include <cstddef>
#include <vector>

#include "ufact/counter_pda.hpp"
#include "ufact/oracle.hpp"
#include "ufact/report.hpp"
#include "ufact/words.hpp"

namespace ufact {

/// One-counter machine for L* − ufp(L), L finite: nondeterministically
/// guesses two factorizations and a factor t ∈ L occurring a different
/// number of times. Runs are tracked as (word, unread-suffix) pairs, t is
/// fixed at run start via the initial-state set, and the counter holds
/// |#t in run 1 − #t in run 2| with a top/bottom flag for the sign.
/// Requires ε ∉ L.
OneCounterPda build_ufp_counter_machine(const Alphabet& alphabet,
                                        const std::vector<Word>& words);

/// {x ∈ L* : |x| ≤ max_len, all factorizations share one factor multiset}.
std::vector<Word> ufp_slice(const Alphabet& alphabet, const std::vector<Word>& words,
                            std::size_t max_len, std::size_t cap = kDefaultSliceCap);

/// Desk-scale confirmation for the six-word language {aa,aaa,ab,ac,ba,ca}
/// and R = aa(ab)+(ac)+aa(ba)+(ca)+aaa: a word of R with exponents
/// (r,s,t,q) is permutationally unique iff r=t and s=q, and it has exactly
/// the two expected factorization shapes.
CheckReport bell_intersection_check(int r_max);

}  // namespace ufact
