#include "ufact/su_engine.hpp"

#include <map>
#include <tuple>

namespace ufact {

namespace {

constexpr int kTop = 0;
constexpr int kBottom = 1;

using RunPair = std::tuple<int, int, int>;  // (q1, q2, flag)

}  // namespace

OneCounterPda build_su_counter_machine(const Dfa& m) {
  if (m.accepting[static_cast<std::size_t>(m.initial)])
    throw Error(ErrorKind::EpsilonInLanguage, "ε ∈ L: su machine requires ε ∉ L");

  OneCounterPda pda;
  pda.alphabet = m.alphabet;
  pda.accept_condition = OneCounterPda::AcceptCondition::CounterNonzero;

  std::map<RunPair, int> ids;
  std::vector<RunPair> states;
  auto intern = [&](RunPair key) {
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(states.size());
    ids.emplace(key, id);
    states.push_back(key);
    return id;
  };

  int start = intern({m.initial, m.initial, kTop});
  pda.initials = {start};

  auto accepting_state = [&](int q) { return m.accepting[static_cast<std::size_t>(q)]; };

  for (int id = 0; id < static_cast<int>(states.size()); ++id) {
    auto [q1, q2, flag] = states[static_cast<std::size_t>(id)];
    for (Symbol a = 0; a < m.alphabet.size(); ++a) {
      int reset_target = m.step(m.initial, a);
      for (int r1 = 0; r1 <= (accepting_state(q1) ? 1 : 0); ++r1)
        for (int r2 = 0; r2 <= (accepting_state(q2) ? 1 : 0); ++r2) {
          int p1 = r1 ? reset_target : m.step(q1, a);
          int p2 = r2 ? reset_target : m.step(q2, a);
          int d = r1 - r2;
          int e = flag == kTop ? d : -d;
          if (e == 0) {
            pda.moves.push_back({id, a, CounterTest::Any, 0, intern({p1, p2, flag})});
          } else if (e == 1) {
            pda.moves.push_back({id, a, CounterTest::Any, +1, intern({p1, p2, flag})});
          } else {
            pda.moves.push_back({id, a, CounterTest::Nonzero, -1, intern({p1, p2, flag})});
            pda.moves.push_back({id, a, CounterTest::Zero, +1, intern({p1, p2, 1 - flag})});
          }
        }
    }
  }

  pda.state_count = static_cast<int>(states.size());
  pda.accepting.assign(states.size(), false);
  pda.state_labels.resize(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [q1, q2, flag] = states[i];
    pda.accepting[i] = accepting_state(q1) && accepting_state(q2);
    pda.state_labels[i] = "(" + std::to_string(q1) + "," + std::to_string(q2) + "," +
                          (flag == kTop ? "t" : "b") + ")";
  }
  return pda;
}

Cfg su_complement_cfg(const Dfa& m) { return pda_to_cfg(build_su_counter_machine(m)); }

bool su_gap_exists(const Dfa& m) { return cfg_nonempty(su_complement_cfg(m)); }

std::vector<Word> su_slice(const FactorLanguage& L, std::size_t max_len, std::size_t cap) {
  return slice_by_predicate(L, FactorPredicate::Su, max_len, cap);
}

}  // namespace ufact
