#include "ufact/words.hpp"

#include <algorithm>

namespace ufact {

namespace {

bool token_ok(const std::string& t) {
  if (t.empty()) return false;
  for (char c : t) {
    if (c == '|' || c == '*' || c == '+' || c == '(' || c == ')') return false;
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw Error(ErrorKind::Parse, "alphabet must be non-empty");
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const std::string& t = tokens_[i];
    if (!token_ok(t))
      throw Error(ErrorKind::Parse, "invalid alphabet token '" + t + "'");
    auto [it, inserted] = index_.emplace(t, static_cast<Symbol>(i));
    if (!inserted)
      throw Error(ErrorKind::Parse, "duplicate alphabet token '" + t + "'");
  }
}

std::optional<Symbol> Alphabet::find(const std::string& token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::require(const std::string& token) const {
  auto s = find(token);
  if (!s) throw Error(ErrorKind::UnknownSymbol, "unknown symbol '" + token + "'");
  return *s;
}

Word Alphabet::word(const std::vector<std::string>& tokens) const {
  Word w;
  w.reserve(tokens.size());
  for (const auto& t : tokens) w.push_back(require(t));
  return w;
}

Word Alphabet::word(const std::string& chars) const {
  Word w;
  w.reserve(chars.size());
  for (char c : chars) w.push_back(require(std::string(1, c)));
  return w;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "ε";
  bool all_single = std::all_of(tokens_.begin(), tokens_.end(),
                                [](const std::string& t) { return t.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!all_single && i > 0) out += ' ';
    out += token(w[i]);
  }
  return out;
}

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace ufact
