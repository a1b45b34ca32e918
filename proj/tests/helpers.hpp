#pragma once

#include <random>
#include <set>
#include <vector>

#include "ufact/automata.hpp"
#include "ufact/words.hpp"

namespace ufact::testing {

// Brute-force slice by direct acceptance checks over all words of length
// ≤ max_len: the simulation oracle the enumeration-based code is tested
// against.
template <class Automaton>
std::vector<Word> brute_slice(const Automaton& m, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const Word& w : layer)
      if (m.accepts(w)) out.push_back(w);
    if (len == max_len) break;
    std::vector<Word> next;
    for (const Word& w : layer)
      for (Symbol s = 0; s < m.alphabet.size(); ++s) {
        Word v = w;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  return out;
}

inline Dfa random_dfa(std::mt19937& rng, int max_states, int num_symbols,
                      bool allow_initial_accepting = false) {
  std::uniform_int_distribution<int> state_count(1, max_states);
  int n = state_count(rng);
  std::uniform_int_distribution<int> state(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);

  Dfa d;
  std::vector<std::string> tokens;
  for (int s = 0; s < num_symbols; ++s) tokens.emplace_back(1, static_cast<char>('a' + s));
  d.alphabet = Alphabet(tokens);
  d.delta.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(num_symbols)));
  d.accepting.assign(static_cast<std::size_t>(n), false);
  d.initial = 0;
  for (int q = 0; q < n; ++q)
    for (int s = 0; s < num_symbols; ++s)
      d.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)] = state(rng);
  for (int q = allow_initial_accepting ? 0 : 1; q < n; ++q)
    d.accepting[static_cast<std::size_t>(q)] = coin(rng) == 1;
  return d;
}

inline Nfa random_nfa(std::mt19937& rng, int max_states, int num_symbols) {
  std::uniform_int_distribution<int> state_count(1, max_states);
  int n = state_count(rng);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> density(0, 2);

  Nfa m;
  std::vector<std::string> tokens;
  for (int s = 0; s < num_symbols; ++s) tokens.emplace_back(1, static_cast<char>('a' + s));
  m.alphabet = Alphabet(tokens);
  m.delta.assign(static_cast<std::size_t>(n),
                 std::vector<std::vector<int>>(static_cast<std::size_t>(num_symbols)));
  m.accepting.assign(static_cast<std::size_t>(n), false);
  for (int q = 0; q < n; ++q) {
    m.accepting[static_cast<std::size_t>(q)] = coin(rng) == 1;
    for (int s = 0; s < num_symbols; ++s)
      for (int t = 0; t < n; ++t)
        if (density(rng) == 0)
          m.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)].push_back(t);
  }
  for (int q = 0; q < n; ++q)
    if (coin(rng) == 1) m.initials.push_back(q);
  if (m.initials.empty()) m.initials.push_back(0);
  return m;
}

inline std::vector<Word> random_words(std::mt19937& rng, const Alphabet& sigma, int max_words,
                                      int max_word_len) {
  std::uniform_int_distribution<int> word_count(1, max_words);
  std::uniform_int_distribution<int> word_len(1, max_word_len);
  std::uniform_int_distribution<int> letter(0, sigma.size() - 1);
  std::set<Word> words;
  int target = word_count(rng);
  for (int i = 0; i < target; ++i) {
    Word w;
    int len = word_len(rng);
    for (int j = 0; j < len; ++j) w.push_back(letter(rng));
    words.insert(std::move(w));
  }
  return {words.begin(), words.end()};
}

inline std::set<Word> word_set(const std::vector<Word>& words) {
  return {words.begin(), words.end()};
}

}  // namespace ufact::testing
