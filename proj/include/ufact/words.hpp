#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ufact/errors.hpp"

namespace ufact {

/// Symbols are interned: a Symbol is an index into its declared Alphabet,
/// so the declared order doubles as the lexicographic order.
using Symbol = int;

/// A word is a sequence of alphabet symbols; the empty vector is epsilon.
using Word = std::vector<Symbol>;

/// Finite, duplicate-free, ordered set of symbol tokens.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> tokens);

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string& token(Symbol s) const { return tokens_.at(static_cast<std::size_t>(s)); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  std::optional<Symbol> find(const std::string& token) const;
  Symbol require(const std::string& token) const;  // throws UnknownSymbol

  /// Builds a word from token texts; every token must be declared.
  Word word(const std::vector<std::string>& tokens) const;

  /// Convenience for single-character tokens: "aab" -> [a,a,b].
  Word word(const std::string& chars) const;

  /// Renders a word; tokens are joined directly when all are single
  /// characters, otherwise separated by spaces. Epsilon renders as "ε".
  std::string format(const Word& w) const;

  bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> tokens_;
  std::map<std::string, Symbol> index_;
};

/// Shorter words first, ties broken lexicographically in declared order.
bool length_lex_less(const Word& a, const Word& b);

}  // namespace ufact
