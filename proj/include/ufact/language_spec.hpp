#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ufact/automata.hpp"
#include "ufact/oracle.hpp"
#include "ufact/words.hpp"

namespace ufact {

/// Carrier for the language L under analysis: a finite word list or a
/// regex pattern over a declared alphabet.
///
/// JSON schema:
///   { "alphabet": ["a","b"], "kind": "finite", "words": [["a"],["a","b"]] }
///   { "alphabet": ["a","b"], "kind": "regex",  "pattern": "b(aa)*|(aaa)*b" }
struct LanguageSpec {
  enum class Kind { Finite, Regex };

  Kind kind = Kind::Finite;
  Alphabet alphabet;
  std::vector<Word> words;  // Kind::Finite
  std::string pattern;      // Kind::Regex

  bool finite() const { return kind == Kind::Finite; }
};

LanguageSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const LanguageSpec& spec);
LanguageSpec load_spec(const std::string& path);
void save_spec(const LanguageSpec& spec, const std::string& path);

/// Minimal complete DFA for the spec's language.
Dfa spec_dfa(const LanguageSpec& spec);

/// True iff ε ∈ L.
bool spec_contains_epsilon(const LanguageSpec& spec);

/// FactorLanguage view used by the oracle layer (finite specs enumerate by
/// closure, regex specs through the star automaton).
FactorLanguage spec_factor_language(const LanguageSpec& spec);

}  // namespace ufact
