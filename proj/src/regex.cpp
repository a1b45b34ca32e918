#include "ufact/regex.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace ufact {

namespace {

// Thompson fragments over an epsilon-NFA, eliminated before returning.
struct EpsNfa {
  struct State {
    std::vector<std::pair<Symbol, int>> edges;
    std::vector<int> eps;
  };
  std::vector<State> states;

  int add() {
    states.emplace_back();
    return static_cast<int>(states.size()) - 1;
  }
};

struct Fragment {
  int start;
  int accept;
};

struct Token {
  enum class Kind { SymbolTok, Union, Star, Plus, LParen, RParen, End };
  Kind kind;
  Symbol symbol = -1;
  std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& pattern, const Alphabet& alphabet) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < pattern.size()) {
    char c = pattern[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    switch (c) {
      case '|': t.kind = Token::Kind::Union; ++i; break;
      case '*': t.kind = Token::Kind::Star; ++i; break;
      case '+': t.kind = Token::Kind::Plus; ++i; break;
      case '(': t.kind = Token::Kind::LParen; ++i; break;
      case ')': t.kind = Token::Kind::RParen; ++i; break;
      default: {
        // Longest declared token starting here.
        std::size_t best = 0;
        Symbol sym = -1;
        for (Symbol s = 0; s < alphabet.size(); ++s) {
          const std::string& tok = alphabet.token(s);
          if (tok.size() > best && pattern.compare(i, tok.size(), tok) == 0) {
            best = tok.size();
            sym = s;
          }
        }
        if (sym < 0)
          throw Error(ErrorKind::UnknownSymbol,
                      "unknown symbol at position " + std::to_string(i) + " in pattern");
        t.kind = Token::Kind::SymbolTok;
        t.symbol = sym;
        i += best;
        break;
      }
    }
    tokens.push_back(t);
  }
  tokens.push_back({Token::Kind::End, -1, pattern.size()});
  return tokens;
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, EpsNfa& nfa) : tokens_(tokens), nfa_(nfa) {}

  Fragment parse() {
    Fragment f = expr();
    expect(Token::Kind::End, "unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  void expect(Token::Kind kind, const std::string& message) {
    if (peek().kind != kind) throw ParseError(peek().pos, message);
    ++pos_;
  }

  bool starts_atom() const {
    return peek().kind == Token::Kind::SymbolTok || peek().kind == Token::Kind::LParen;
  }

  Fragment expr() {
    Fragment f = term();
    while (peek().kind == Token::Kind::Union) {
      take();
      if (!starts_atom()) throw ParseError(peek().pos, "expected operand after '|'");
      Fragment g = term();
      int s = nfa_.add();
      int a = nfa_.add();
      nfa_.states[static_cast<std::size_t>(s)].eps = {f.start, g.start};
      nfa_.states[static_cast<std::size_t>(f.accept)].eps.push_back(a);
      nfa_.states[static_cast<std::size_t>(g.accept)].eps.push_back(a);
      f = {s, a};
    }
    return f;
  }

  Fragment term() {
    if (!starts_atom()) throw ParseError(peek().pos, "expected symbol or '('");
    Fragment f = factor();
    while (starts_atom()) {
      Fragment g = factor();
      nfa_.states[static_cast<std::size_t>(f.accept)].eps.push_back(g.start);
      f = {f.start, g.accept};
    }
    return f;
  }

  Fragment factor() {
    Fragment f = atom();
    for (;;) {
      if (peek().kind == Token::Kind::Star) {
        take();
        int s = nfa_.add();
        int a = nfa_.add();
        nfa_.states[static_cast<std::size_t>(s)].eps = {f.start, a};
        nfa_.states[static_cast<std::size_t>(f.accept)].eps.push_back(f.start);
        nfa_.states[static_cast<std::size_t>(f.accept)].eps.push_back(a);
        f = {s, a};
      } else if (peek().kind == Token::Kind::Plus) {
        take();
        int a = nfa_.add();
        nfa_.states[static_cast<std::size_t>(f.accept)].eps.push_back(f.start);
        nfa_.states[static_cast<std::size_t>(f.accept)].eps.push_back(a);
        f = {f.start, a};
      } else {
        return f;
      }
    }
  }

  Fragment atom() {
    const Token& t = take();
    if (t.kind == Token::Kind::SymbolTok) {
      int s = nfa_.add();
      int a = nfa_.add();
      nfa_.states[static_cast<std::size_t>(s)].edges.emplace_back(t.symbol, a);
      return {s, a};
    }
    if (t.kind == Token::Kind::LParen) {
      Fragment f = expr();
      expect(Token::Kind::RParen, "expected ')'");
      return f;
    }
    throw ParseError(t.pos, "expected symbol or '('");
  }

  const std::vector<Token>& tokens_;
  EpsNfa& nfa_;
  std::size_t pos_ = 0;
};

std::vector<int> eps_closure(const EpsNfa& nfa, int q) {
  std::vector<int> out{q};
  std::set<int> seen{q};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int t : nfa.states[static_cast<std::size_t>(out[i])].eps)
      if (seen.insert(t).second) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Nfa compile_regex(const std::string& pattern, const Alphabet& alphabet) {
  if (pattern.empty()) throw ParseError(0, "empty pattern");
  EpsNfa eps;
  Parser parser(lex(pattern, alphabet), eps);
  Fragment f = parser.parse();

  int n = static_cast<int>(eps.states.size());
  std::vector<std::vector<int>> closures(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) closures[static_cast<std::size_t>(q)] = eps_closure(eps, q);

  Nfa out;
  out.alphabet = alphabet;
  out.delta.assign(static_cast<std::size_t>(n),
                   std::vector<std::vector<int>>(static_cast<std::size_t>(alphabet.size())));
  out.accepting.assign(static_cast<std::size_t>(n), false);
  for (int q = 0; q < n; ++q) {
    std::vector<std::set<int>> per_symbol(static_cast<std::size_t>(alphabet.size()));
    for (int c : closures[static_cast<std::size_t>(q)]) {
      if (c == f.accept) out.accepting[static_cast<std::size_t>(q)] = true;
      for (auto [sym, t] : eps.states[static_cast<std::size_t>(c)].edges)
        for (int u : closures[static_cast<std::size_t>(t)])
          per_symbol[static_cast<std::size_t>(sym)].insert(u);
    }
    for (Symbol s = 0; s < alphabet.size(); ++s)
      out.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)]
          .assign(per_symbol[static_cast<std::size_t>(s)].begin(),
                  per_symbol[static_cast<std::size_t>(s)].end());
  }
  out.initials = {f.start};

  // Trim unreachable states left over from fragment plumbing.
  std::vector<int> remap(static_cast<std::size_t>(n), -1);
  std::vector<int> order{f.start};
  remap[static_cast<std::size_t>(f.start)] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Symbol s = 0; s < alphabet.size(); ++s)
      for (int t : out.delta[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(s)])
        if (remap[static_cast<std::size_t>(t)] < 0) {
          remap[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
          order.push_back(t);
        }

  Nfa trimmed;
  trimmed.alphabet = alphabet;
  trimmed.delta.assign(order.size(),
                       std::vector<std::vector<int>>(static_cast<std::size_t>(alphabet.size())));
  trimmed.accepting.assign(order.size(), false);
  trimmed.initials = {0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    trimmed.accepting[i] = out.accepting[static_cast<std::size_t>(order[i])];
    for (Symbol s = 0; s < alphabet.size(); ++s) {
      std::vector<int> mapped;
      for (int t : out.delta[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(s)])
        mapped.push_back(remap[static_cast<std::size_t>(t)]);
      std::sort(mapped.begin(), mapped.end());
      trimmed.delta[i][static_cast<std::size_t>(s)] = std::move(mapped);
    }
  }
  return trimmed;
}

}  // namespace ufact
