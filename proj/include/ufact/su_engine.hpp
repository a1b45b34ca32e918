#pragma once

#include <cstddef>
#include <vector>

#include "ufact/automata.hpp"
#include "ufact/cfg.hpp"
#include "ufact/counter_pda.hpp"
#include "ufact/oracle.hpp"

namespace ufact {

/// One-counter machine for L* − su(L): two independent L*-runs of `m`, a
/// counter holding |difference in completed factor counts| and a top/bottom
/// flag naming the run that is ahead. Each run may close a factor exactly
/// when it sits in an accepting state; acceptance requires both runs ending
/// in accepting states with the counter nonzero, i.e. two factorizations of
/// the input with different term counts. Requires ε ∉ L(m).
OneCounterPda build_su_counter_machine(const Dfa& m);

/// Decides whether some x ∈ L* lacks semi-unique factorization, through the
/// full decidability chain: counter machine → grammar → emptiness.
bool su_gap_exists(const Dfa& m);

/// Grammar for L* − su(L(m))) (the intermediate object of su_gap_exists).
Cfg su_complement_cfg(const Dfa& m);

/// {x ∈ L* : |x| ≤ max_len, all factorizations have equal length}, by the
/// brute-force oracle.
std::vector<Word> su_slice(const FactorLanguage& L, std::size_t max_len,
                           std::size_t cap = kDefaultSliceCap);

}  // namespace ufact
