#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ufact/counter_pda.hpp"
#include "ufact/words.hpp"

namespace ufact {

/// Context-free grammar used for emptiness testing of PDA languages.
struct Cfg {
  struct Ref {
    bool terminal = false;
    int id = 0;  // Symbol when terminal, nonterminal index otherwise
  };
  using Production = std::vector<Ref>;

  Alphabet alphabet;
  std::vector<std::string> nonterminal_names;
  std::vector<std::pair<int, Production>> productions;  // lhs -> rhs
  int start = 0;

  int nonterminal_count() const { return static_cast<int>(nonterminal_names.size()); }
};

/// Standard state-pair (triple) conversion, with the counter viewed as a
/// one-symbol stack over a bottom marker. Acceptance is compiled into a
/// stack-draining tail, and only useful triples (generating, reachable)
/// are materialized, so L(G) = L(pda) exactly while the grammar stays
/// finite in practice. Throws a state-explosion error past production_cap.
Cfg pda_to_cfg(const OneCounterPda& pda, std::size_t production_cap = 2'000'000);

/// True iff L(g) ≠ ∅, by the generating-nonterminals fixpoint.
bool cfg_nonempty(const Cfg& g);

/// One production group per line: "S -> a T | ε".
std::string cfg_dump(const Cfg& g);

/// All derivable words of length ≤ max_len (debug/desk-scale helper).
std::vector<Word> cfg_slice(const Cfg& g, std::size_t max_len, std::size_t cap = 100'000);

}  // namespace ufact
