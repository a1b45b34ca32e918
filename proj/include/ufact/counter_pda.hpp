#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ufact/words.hpp"

namespace ufact {

enum class CounterTest { Zero, Nonzero, Any };

/// One move of a one-counter machine. `input` empty means an ε-move;
/// `delta` is −1, 0 or +1 and a decrement always carries a Nonzero test,
/// so the counter never drops below zero.
struct CounterMove {
  int from = 0;
  std::optional<Symbol> input;
  CounterTest test = CounterTest::Any;
  int delta = 0;
  int to = 0;
};

/// Nondeterministic machine with a single non-negative counter; acceptance
/// requires the whole input consumed, an accepting state, and the counter
/// condition.
struct OneCounterPda {
  Alphabet alphabet;
  int state_count = 0;
  std::vector<CounterMove> moves;
  std::vector<int> initials;
  std::vector<bool> accepting;
  enum class AcceptCondition { CounterNonzero, CounterAny };
  AcceptCondition accept_condition = AcceptCondition::CounterNonzero;
  std::vector<std::string> state_labels;
};

/// Exact simulation with the counter clamped to `counter_cap`: runs that
/// would push past the cap are discarded, so this underapproximates in
/// general but is exact whenever every accepting run stays within the cap
/// (for the factorization machines, counter ≤ |word| always suffices).
bool accepts_bounded(const OneCounterPda& pda, const Word& w, std::size_t counter_cap);

}  // namespace ufact
