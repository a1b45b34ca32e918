#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ufact/words.hpp"

namespace ufact {

inline constexpr std::size_t kDefaultSliceCap = 1'000'000;

/// Complete deterministic automaton: delta has one row per state and one
/// (always defined) entry per alphabet symbol.
struct Dfa {
  Alphabet alphabet;
  std::vector<std::vector<int>> delta;  // [state][symbol] -> state
  int initial = 0;
  std::vector<bool> accepting;

  int state_count() const { return static_cast<int>(delta.size()); }
  int step(int state, Symbol s) const { return delta[static_cast<std::size_t>(state)][static_cast<std::size_t>(s)]; }
  int run(int from, const Word& w) const;
  bool accepts(const Word& w) const;
};

/// Nondeterministic automaton with an initial-state set. Epsilon moves are
/// never stored; constructions eliminate them before producing an Nfa.
struct Nfa {
  Alphabet alphabet;
  std::vector<std::vector<std::vector<int>>> delta;  // [state][symbol] -> sorted targets
  std::vector<int> initials;                         // sorted, duplicate-free
  std::vector<bool> accepting;
  std::vector<std::string> state_labels;             // optional diagnostics

  int state_count() const { return static_cast<int>(delta.size()); }
  const std::vector<int>& targets(int state, Symbol s) const {
    return delta[static_cast<std::size_t>(state)][static_cast<std::size_t>(s)];
  }
  bool accepts(const Word& w) const;  // direct subset simulation
};

/// Subset construction; the result is always complete (the empty subset
/// acts as the sink when reachable).
Dfa determinize(const Nfa& nfa);

/// Minimal complete DFA for the same language (Moore refinement over the
/// reachable part). Idempotent; never increases the state count.
Dfa minimize(const Dfa& dfa);

/// Boolean product: accepts w iff combine(a accepts w, b accepts w).
Dfa product(const Dfa& a, const Dfa& b, const std::function<bool(bool, bool)>& combine);

/// Language of `universe` minus language of `a`.
Dfa complement_within(const Dfa& a, const Dfa& universe);

/// NFA for L(dfa)*, with epsilon transitions already eliminated.
///
/// A fresh start state (index 0) with no natural in-edges is used; every
/// transition whose target is accepting in `dfa` gains a parallel edge back
/// to it, so paths from 0 to 0 on x correspond one-to-one to factorizations
/// of x into L(dfa)-words. State 0 is the only accepting state (ε ∈ L*).
/// Requires ε ∉ L(dfa).
Nfa star_nfa(const Dfa& dfa);

/// Shortest accepted word, lexicographically least among shortest words in
/// the declared symbol order; absent when the language is empty.
std::optional<Word> shortest_accepted(const Dfa& dfa);
std::optional<Word> shortest_accepted(const Nfa& nfa);

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<Word> counterexample;  // shortest, lex-least, when not equivalent
};

EquivalenceResult equivalent(const Dfa& a, const Dfa& b);

/// All accepted words of length <= max_len, in length-then-lex order.
/// Throws SliceOverflow past `cap` results.
std::vector<Word> enumerate_slice(const Dfa& dfa, std::size_t max_len,
                                  std::size_t cap = kDefaultSliceCap);
std::vector<Word> enumerate_slice(const Nfa& nfa, std::size_t max_len,
                                  std::size_t cap = kDefaultSliceCap);

/// Minimal complete DFA for a finite set of words.
Dfa dfa_from_words(const Alphabet& alphabet, const std::vector<Word>& words);

/// Complete one-state DFA for the empty language.
Dfa empty_dfa(const Alphabet& alphabet);

}  // namespace ufact
