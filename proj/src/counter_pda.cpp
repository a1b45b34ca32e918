#include "ufact/counter_pda.hpp"

#include <set>
#include <utility>

namespace ufact {

namespace {

bool test_holds(CounterTest test, std::size_t counter) {
  switch (test) {
    case CounterTest::Zero: return counter == 0;
    case CounterTest::Nonzero: return counter > 0;
    case CounterTest::Any: return true;
  }
  return false;
}

using Config = std::pair<int, std::size_t>;  // (state, counter)

void close_epsilon(const OneCounterPda& pda, std::set<Config>& configs, std::size_t cap) {
  std::vector<Config> frontier(configs.begin(), configs.end());
  while (!frontier.empty()) {
    Config c = frontier.back();
    frontier.pop_back();
    for (const CounterMove& mv : pda.moves) {
      if (mv.input || mv.from != c.first) continue;
      if (!test_holds(mv.test, c.second)) continue;
      if (mv.delta > 0 && c.second >= cap) continue;
      if (mv.delta < 0 && c.second == 0) continue;
      std::size_t counter = mv.delta < 0 ? c.second - 1 : c.second + static_cast<std::size_t>(mv.delta);
      Config next{mv.to, counter};
      if (configs.insert(next).second) frontier.push_back(next);
    }
  }
}

}  // namespace

bool accepts_bounded(const OneCounterPda& pda, const Word& w, std::size_t counter_cap) {
  std::set<Config> configs;
  for (int q : pda.initials) configs.insert({q, 0});
  close_epsilon(pda, configs, counter_cap);

  for (Symbol a : w) {
    std::set<Config> next;
    for (const Config& c : configs)
      for (const CounterMove& mv : pda.moves) {
        if (!mv.input || *mv.input != a || mv.from != c.first) continue;
        if (!test_holds(mv.test, c.second)) continue;
        if (mv.delta > 0 && c.second >= counter_cap) continue;
        if (mv.delta < 0 && c.second == 0) continue;
        std::size_t counter = mv.delta < 0 ? c.second - 1 : c.second + static_cast<std::size_t>(mv.delta);
        next.insert({mv.to, counter});
      }
    if (next.empty()) return false;
    close_epsilon(pda, next, counter_cap);
    configs = std::move(next);
  }

  for (const Config& c : configs) {
    if (!pda.accepting[static_cast<std::size_t>(c.first)]) continue;
    if (pda.accept_condition == OneCounterPda::AcceptCondition::CounterNonzero && c.second == 0)
      continue;
    return true;
  }
  return false;
}

}  // namespace ufact
