#pragma once

#include <cstddef>
#include <optional>

#include "ufact/automata.hpp"
#include "ufact/report.hpp"

namespace ufact {

/// NFA guessing two distinct factorizations of its input into L(m)-words.
///
/// States are the m-states plus all ordered state pairs (n + n² total, in
/// that order), labeled "q" and "[p,q]" for DOT export. Single states track
/// one shared factorization prefix; at an accepting state the machine may
/// close the current factor, keep reading the same factor, or split into a
/// pair that closes the factor on one side only. Pairs advance both runs,
/// closing factors independently at accepting states; final states are the
/// accepting×accepting pairs. Accepts exactly the words of L(m)* with at
/// least two distinct factorizations. Requires ε ∉ L(m).
Nfa build_double_nfa(const Dfa& m);

/// DFA for uf(L(m)): the words of L* with exactly one factorization
/// (ε included). Returns the empty language when ε ∈ L(m).
Dfa uf_dfa(const Dfa& m);

/// The same language through the saturating-transition-matrix route: DFA
/// states are the reachable {0,1,2}-matrices of the star NFA, and a word is
/// accepted iff its matrix has exactly one start→start path. Requires
/// ε ∉ L(m); throws a state-explosion error past `matrix_cap` matrices.
Dfa matrix_uf_dfa(const Dfa& m, std::size_t matrix_cap = 100'000);

struct CodeCheck {
  bool code = true;
  std::optional<Word> witness;  // shortest ambiguous word when not a code
};

/// Unique-decipherability test for L(m). When L(m) is not a code the
/// witness is the shortest (lex-least) ambiguous word; its length is
/// strictly below n²+n for an n-state input DFA, which is asserted.
CodeCheck is_code(const Dfa& m);

/// Desk-scale confirmation that uf(PALSTAR) equals PRIMEPALSTAR on all
/// nonempty binary words of length ≤ max_len. PALSTAR is the set of
/// concatenations of one or more nonempty even-length palindromes over
/// {a,b}; membership and factorization counts are decided by dynamic
/// programming, independent of the automata constructions.
CheckReport palstar_uf_check(std::size_t max_len);

}  // namespace ufact
