#pragma once

#include <string>

#include "ufact/automata.hpp"
#include "ufact/words.hpp"

namespace ufact {

/// Compiles a pattern over the operators `|` (union), `*`, postfix `+`,
/// parentheses and alphabet tokens into an epsilon-free NFA.
///
/// Tokens are matched longest-first against the declared alphabet, so
/// multi-character tokens may appear directly in the pattern; whitespace
/// separates tokens and is otherwise ignored. Throws ParseError (with the
/// offending position) on malformed patterns and an UnknownSymbol error on
/// undeclared tokens.
Nfa compile_regex(const std::string& pattern, const Alphabet& alphabet);

}  // namespace ufact
