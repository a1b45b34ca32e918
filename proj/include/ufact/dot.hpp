#pragma once

#include <string>

#include "ufact/automata.hpp"

namespace ufact {

/// Graphviz rendering; state labels fall back to state numbers when an Nfa
/// carries no diagnostic labels. Parallel edges are merged into one edge
/// with a comma-separated label.
std::string to_dot(const Dfa& dfa, const std::string& name = "dfa");
std::string to_dot(const Nfa& nfa, const std::string& name = "nfa");

}  // namespace ufact
