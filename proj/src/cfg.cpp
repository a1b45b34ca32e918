#include "ufact/cfg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "ufact/errors.hpp"

namespace ufact {

namespace {

// Internal PDA over the two-symbol stack {X, Z} (Z is the bottom marker).
enum StackSym : int { kX = 0, kZ = 1 };

struct StackMove {
  int from;
  std::optional<Symbol> input;
  int top;                 // StackSym
  std::vector<int> push;   // replacement for the top, bottom-last; empty = pop
  int to;
};

struct StackPda {
  int states;
  std::vector<StackMove> moves;
  std::vector<int> initials;
  std::vector<std::string> labels;
};

StackPda lower_counter_machine(const OneCounterPda& pda) {
  StackPda out;
  out.states = pda.state_count + 2;  // +drain, +done
  int drain = pda.state_count;
  int done = pda.state_count + 1;
  out.initials = pda.initials;
  out.labels.resize(static_cast<std::size_t>(out.states));
  for (int q = 0; q < pda.state_count; ++q)
    out.labels[static_cast<std::size_t>(q)] =
        q < static_cast<int>(pda.state_labels.size()) && !pda.state_labels[static_cast<std::size_t>(q)].empty()
            ? pda.state_labels[static_cast<std::size_t>(q)]
            : std::to_string(q);
  out.labels[static_cast<std::size_t>(drain)] = "drain";
  out.labels[static_cast<std::size_t>(done)] = "done";

  auto add = [&](int from, std::optional<Symbol> input, int top, std::vector<int> push, int to) {
    out.moves.push_back({from, input, top, std::move(push), to});
  };

  for (const CounterMove& mv : pda.moves) {
    bool on_x = mv.test != CounterTest::Zero;
    bool on_z = mv.test != CounterTest::Nonzero;
    if (on_x) {
      if (mv.delta < 0)
        add(mv.from, mv.input, kX, {}, mv.to);
      else if (mv.delta == 0)
        add(mv.from, mv.input, kX, {kX}, mv.to);
      else
        add(mv.from, mv.input, kX, {kX, kX}, mv.to);
    }
    if (on_z) {
      // A decrement at zero is illegal and simply has no lowered move.
      if (mv.delta == 0)
        add(mv.from, mv.input, kZ, {kZ}, mv.to);
      else if (mv.delta > 0)
        add(mv.from, mv.input, kZ, {kX, kZ}, mv.to);
    }
  }

  // Acceptance tail: accepting states hand off to a drain that empties the
  // stack, so empty-stack acceptance matches the machine's own condition.
  for (int q = 0; q < pda.state_count; ++q) {
    if (!pda.accepting[static_cast<std::size_t>(q)]) continue;
    add(q, std::nullopt, kX, {}, drain);  // certifies counter ≥ 1
    if (pda.accept_condition == OneCounterPda::AcceptCondition::CounterAny)
      add(q, std::nullopt, kZ, {}, done);
  }
  add(drain, std::nullopt, kX, {}, drain);
  add(drain, std::nullopt, kZ, {}, done);
  return out;
}

using Bitset = std::vector<std::uint64_t>;

bool bit_get(const Bitset& b, int i) {
  return (b[static_cast<std::size_t>(i) >> 6] >> (static_cast<std::size_t>(i) & 63)) & 1u;
}

bool bit_set(Bitset& b, int i) {
  std::uint64_t& word = b[static_cast<std::size_t>(i) >> 6];
  std::uint64_t mask = 1ull << (static_cast<std::size_t>(i) & 63);
  if (word & mask) return false;
  word |= mask;
  return true;
}

// pop[A][p] = set of q such that, from state p with A on top, the machine
// can consume some input ending in state q with that A popped. This is the
// generating relation of the triple grammar, computed without materializing
// productions.
std::vector<std::vector<Bitset>> pop_relation(const StackPda& pda) {
  std::size_t words = (static_cast<std::size_t>(pda.states) + 63) / 64;
  std::vector<std::vector<Bitset>> pop(
      2, std::vector<Bitset>(static_cast<std::size_t>(pda.states), Bitset(words, 0)));

  bool changed = true;
  while (changed) {
    changed = false;
    for (const StackMove& mv : pda.moves) {
      Bitset& target = pop[static_cast<std::size_t>(mv.top)][static_cast<std::size_t>(mv.from)];
      if (mv.push.empty()) {
        if (bit_set(target, mv.to)) changed = true;
      } else if (mv.push.size() == 1) {
        const Bitset& src = pop[static_cast<std::size_t>(mv.push[0])][static_cast<std::size_t>(mv.to)];
        for (std::size_t i = 0; i < words; ++i) {
          std::uint64_t add = src[i] & ~target[i];
          if (add) {
            target[i] |= add;
            changed = true;
          }
        }
      } else {  // push.size() == 2: top B then C beneath replaced order {B, C}
        const Bitset& first = pop[static_cast<std::size_t>(mv.push[0])][static_cast<std::size_t>(mv.to)];
        for (int s = 0; s < pda.states; ++s) {
          if (!bit_get(first, s)) continue;
          const Bitset& second = pop[static_cast<std::size_t>(mv.push[1])][static_cast<std::size_t>(s)];
          for (std::size_t i = 0; i < words; ++i) {
            std::uint64_t add = second[i] & ~target[i];
            if (add) {
              target[i] |= add;
              changed = true;
            }
          }
        }
      }
    }
  }
  return pop;
}

}  // namespace

Cfg pda_to_cfg(const OneCounterPda& pda, std::size_t production_cap) {
  StackPda lowered = lower_counter_machine(pda);
  auto pop = pop_relation(lowered);

  Cfg g;
  g.alphabet = pda.alphabet;
  g.nonterminal_names.push_back("S");
  g.start = 0;

  std::map<std::tuple<int, int, int>, int> triple_ids;
  auto triple = [&](int p, int a, int q) {
    auto key = std::make_tuple(p, a, q);
    auto it = triple_ids.find(key);
    if (it != triple_ids.end()) return it->second;
    int id = static_cast<int>(g.nonterminal_names.size());
    triple_ids.emplace(key, id);
    g.nonterminal_names.push_back("[" + lowered.labels[static_cast<std::size_t>(p)] + "," +
                                  (a == kX ? "X" : "Z") + "," +
                                  lowered.labels[static_cast<std::size_t>(q)] + "]");
    return id;
  };

  auto add_production = [&](int lhs, Cfg::Production rhs) {
    if (g.productions.size() >= production_cap)
      throw Error(ErrorKind::StateExplosion, "grammar materialization exceeded production cap");
    g.productions.emplace_back(lhs, std::move(rhs));
  };

  for (int i : lowered.initials)
    for (int r = 0; r < lowered.states; ++r)
      if (bit_get(pop[kZ][static_cast<std::size_t>(i)], r))
        add_production(g.start, {Cfg::Ref{false, triple(i, kZ, r)}});

  for (const StackMove& mv : lowered.moves) {
    Cfg::Production prefix;
    if (mv.input) prefix.push_back(Cfg::Ref{true, *mv.input});
    if (mv.push.empty()) {
      add_production(triple(mv.from, mv.top, mv.to), prefix);
    } else if (mv.push.size() == 1) {
      for (int r = 0; r < lowered.states; ++r) {
        if (!bit_get(pop[static_cast<std::size_t>(mv.push[0])][static_cast<std::size_t>(mv.to)], r))
          continue;
        Cfg::Production rhs = prefix;
        rhs.push_back(Cfg::Ref{false, triple(mv.to, mv.push[0], r)});
        add_production(triple(mv.from, mv.top, r), std::move(rhs));
      }
    } else {
      for (int s = 0; s < lowered.states; ++s) {
        if (!bit_get(pop[static_cast<std::size_t>(mv.push[0])][static_cast<std::size_t>(mv.to)], s))
          continue;
        for (int r = 0; r < lowered.states; ++r) {
          if (!bit_get(pop[static_cast<std::size_t>(mv.push[1])][static_cast<std::size_t>(s)], r))
            continue;
          Cfg::Production rhs = prefix;
          rhs.push_back(Cfg::Ref{false, triple(mv.to, mv.push[0], s)});
          rhs.push_back(Cfg::Ref{false, triple(s, mv.push[1], r)});
          add_production(triple(mv.from, mv.top, r), std::move(rhs));
        }
      }
    }
  }

  // Keep only nonterminals reachable from S (the pop relation already
  // guaranteed everything materialized is generating).
  std::vector<std::vector<std::size_t>> by_lhs(g.nonterminal_names.size());
  for (std::size_t i = 0; i < g.productions.size(); ++i)
    by_lhs[static_cast<std::size_t>(g.productions[i].first)].push_back(i);

  std::vector<int> remap(g.nonterminal_names.size(), -1);
  std::vector<int> order{g.start};
  remap[static_cast<std::size_t>(g.start)] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t pi : by_lhs[static_cast<std::size_t>(order[i])])
      for (const Cfg::Ref& ref : g.productions[pi].second)
        if (!ref.terminal && remap[static_cast<std::size_t>(ref.id)] < 0) {
          remap[static_cast<std::size_t>(ref.id)] = static_cast<int>(order.size());
          order.push_back(ref.id);
        }

  Cfg cleaned;
  cleaned.alphabet = g.alphabet;
  cleaned.start = 0;
  cleaned.nonterminal_names.reserve(order.size());
  for (int old : order) cleaned.nonterminal_names.push_back(g.nonterminal_names[static_cast<std::size_t>(old)]);
  for (auto& [lhs, rhs] : g.productions) {
    if (remap[static_cast<std::size_t>(lhs)] < 0) continue;
    Cfg::Production mapped;
    mapped.reserve(rhs.size());
    for (const Cfg::Ref& ref : rhs)
      mapped.push_back(ref.terminal ? ref : Cfg::Ref{false, remap[static_cast<std::size_t>(ref.id)]});
    cleaned.productions.emplace_back(remap[static_cast<std::size_t>(lhs)], std::move(mapped));
  }
  return cleaned;
}

bool cfg_nonempty(const Cfg& g) {
  if (g.nonterminal_names.empty()) return false;
  std::vector<bool> generating(g.nonterminal_names.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lhs, rhs] : g.productions) {
      if (generating[static_cast<std::size_t>(lhs)]) continue;
      bool all = std::all_of(rhs.begin(), rhs.end(), [&](const Cfg::Ref& ref) {
        return ref.terminal || generating[static_cast<std::size_t>(ref.id)];
      });
      if (all) {
        generating[static_cast<std::size_t>(lhs)] = true;
        changed = true;
      }
    }
  }
  return generating[static_cast<std::size_t>(g.start)];
}

std::string cfg_dump(const Cfg& g) {
  std::ostringstream os;
  for (int nt = 0; nt < g.nonterminal_count(); ++nt) {
    bool any = false;
    for (const auto& [lhs, rhs] : g.productions) {
      if (lhs != nt) continue;
      if (!any) {
        os << g.nonterminal_names[static_cast<std::size_t>(nt)] << " -> ";
        any = true;
      } else {
        os << " | ";
      }
      if (rhs.empty()) {
        os << "ε";
      } else {
        for (std::size_t i = 0; i < rhs.size(); ++i) {
          if (i > 0) os << " ";
          os << (rhs[i].terminal ? g.alphabet.token(rhs[i].id)
                                 : g.nonterminal_names[static_cast<std::size_t>(rhs[i].id)]);
        }
      }
    }
    if (any) os << "\n";
  }
  return os.str();
}

std::vector<Word> cfg_slice(const Cfg& g, std::size_t max_len, std::size_t cap) {
  std::vector<std::set<Word>> derivable(g.nonterminal_names.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lhs, rhs] : g.productions) {
      std::set<Word> partial{Word{}};
      for (const Cfg::Ref& ref : rhs) {
        std::set<Word> next;
        for (const Word& head : partial) {
          if (ref.terminal) {
            if (head.size() + 1 > max_len) continue;
            Word w = head;
            w.push_back(ref.id);
            next.insert(std::move(w));
          } else {
            for (const Word& tail : derivable[static_cast<std::size_t>(ref.id)]) {
              if (head.size() + tail.size() > max_len) continue;
              Word w = head;
              w.insert(w.end(), tail.begin(), tail.end());
              next.insert(std::move(w));
            }
          }
        }
        partial = std::move(next);
        if (partial.empty()) break;
      }
      for (const Word& w : partial)
        if (derivable[static_cast<std::size_t>(lhs)].insert(w).second) {
          changed = true;
          if (derivable[static_cast<std::size_t>(lhs)].size() > cap)
            throw Error(ErrorKind::SliceOverflow, "grammar slice exceeded cap");
        }
    }
  }
  std::vector<Word> out(derivable[static_cast<std::size_t>(g.start)].begin(),
                        derivable[static_cast<std::size_t>(g.start)].end());
  std::sort(out.begin(), out.end(), length_lex_less);
  return out;
}

}  // namespace ufact
