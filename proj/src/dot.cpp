#include "ufact/dot.hpp"

#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace ufact {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void write_header(std::ostringstream& os, const std::string& name) {
  os << "digraph " << name << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle, fontsize=11];\n";
}

void write_edges(std::ostringstream& os,
                 const std::map<std::pair<int, int>, std::vector<std::string>>& edges) {
  for (const auto& [pq, labels] : edges) {
    os << "  n" << pq.first << " -> n" << pq.second << " [label=\"";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i > 0) os << ",";
      os << escape(labels[i]);
    }
    os << "\"];\n";
  }
}

}  // namespace

std::string to_dot(const Dfa& dfa, const std::string& name) {
  std::ostringstream os;
  write_header(os, name);
  for (int q = 0; q < dfa.state_count(); ++q)
    os << "  n" << q << " [label=\"" << q << "\""
       << (dfa.accepting[static_cast<std::size_t>(q)] ? ", shape=doublecircle" : "") << "];\n";
  os << "  start [shape=point];\n";
  os << "  start -> n" << dfa.initial << ";\n";
  std::map<std::pair<int, int>, std::vector<std::string>> edges;
  for (int q = 0; q < dfa.state_count(); ++q)
    for (Symbol s = 0; s < dfa.alphabet.size(); ++s)
      edges[{q, dfa.step(q, s)}].push_back(dfa.alphabet.token(s));
  write_edges(os, edges);
  os << "}\n";
  return os.str();
}

std::string to_dot(const Nfa& nfa, const std::string& name) {
  std::ostringstream os;
  write_header(os, name);
  for (int q = 0; q < nfa.state_count(); ++q) {
    std::string label = q < static_cast<int>(nfa.state_labels.size()) &&
                                !nfa.state_labels[static_cast<std::size_t>(q)].empty()
                            ? nfa.state_labels[static_cast<std::size_t>(q)]
                            : std::to_string(q);
    os << "  n" << q << " [label=\"" << escape(label) << "\""
       << (nfa.accepting[static_cast<std::size_t>(q)] ? ", shape=doublecircle" : "") << "];\n";
  }
  os << "  start [shape=point];\n";
  for (int q : nfa.initials) os << "  start -> n" << q << ";\n";
  std::map<std::pair<int, int>, std::vector<std::string>> edges;
  for (int q = 0; q < nfa.state_count(); ++q)
    for (Symbol s = 0; s < nfa.alphabet.size(); ++s)
      for (int t : nfa.targets(q, s)) edges[{q, t}].push_back(nfa.alphabet.token(s));
  write_edges(os, edges);
  os << "}\n";
  return os.str();
}

}  // namespace ufact
