#include "ufact/automata.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <queue>
#include <utility>

namespace ufact {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

void check_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (a != b) throw Error(ErrorKind::AlphabetMismatch, "operands use different alphabets");
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Uniform stepping interface so BFS/slice code is shared by Dfa and Nfa.
struct DfaView {
  const Dfa& m;
  int states() const { return m.state_count(); }
  std::vector<int> starts() const { return {m.initial}; }
  bool accepting(int q) const { return m.accepting[static_cast<std::size_t>(q)]; }
  void step_into(int q, Symbol s, std::vector<int>& out) const { out.push_back(m.step(q, s)); }
};

struct NfaView {
  const Nfa& m;
  int states() const { return m.state_count(); }
  std::vector<int> starts() const { return m.initials; }
  bool accepting(int q) const { return m.accepting[static_cast<std::size_t>(q)]; }
  void step_into(int q, Symbol s, std::vector<int>& out) const {
    const auto& t = m.targets(q, s);
    out.insert(out.end(), t.begin(), t.end());
  }
};

template <class View>
std::vector<int> step_set(const View& v, const std::vector<int>& set, Symbol s) {
  std::vector<int> out;
  for (int q : set) v.step_into(q, s, out);
  return sorted_unique(std::move(out));
}

// Minimum number of symbols from each state to any accepting state,
// ignoring labels (reverse BFS); kInf when no accepting state is reachable.
template <class View>
std::vector<std::size_t> distance_to_accepting(const View& v, int num_symbols) {
  int n = v.states();
  std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
  std::vector<int> one;
  for (int q = 0; q < n; ++q) {
    one.clear();
    for (Symbol s = 0; s < num_symbols; ++s) v.step_into(q, s, one);
    for (int t : sorted_unique(one)) rev[static_cast<std::size_t>(t)].push_back(q);
    one.clear();
  }
  std::vector<std::size_t> dist(static_cast<std::size_t>(n), kInf);
  std::deque<int> bfs;
  for (int q = 0; q < n; ++q)
    if (v.accepting(q)) {
      dist[static_cast<std::size_t>(q)] = 0;
      bfs.push_back(q);
    }
  while (!bfs.empty()) {
    int q = bfs.front();
    bfs.pop_front();
    for (int p : rev[static_cast<std::size_t>(q)])
      if (dist[static_cast<std::size_t>(p)] == kInf) {
        dist[static_cast<std::size_t>(p)] = dist[static_cast<std::size_t>(q)] + 1;
        bfs.push_back(p);
      }
  }
  return dist;
}

template <class View>
std::size_t min_distance(const std::vector<std::size_t>& dist, const View&, const std::vector<int>& set) {
  std::size_t best = kInf;
  for (int q : set) best = std::min(best, dist[static_cast<std::size_t>(q)]);
  return best;
}

template <class View>
std::optional<Word> shortest_accepted_impl(const View& v, const Alphabet& alphabet) {
  auto dist = distance_to_accepting(v, alphabet.size());
  std::vector<int> set = sorted_unique(v.starts());
  std::size_t remaining = min_distance(dist, v, set);
  if (remaining == kInf) return std::nullopt;
  Word w;
  w.reserve(remaining);
  while (remaining > 0) {
    for (Symbol s = 0; s < alphabet.size(); ++s) {
      auto next = step_set(v, set, s);
      if (min_distance(dist, v, next) == remaining - 1) {
        w.push_back(s);
        set = std::move(next);
        break;
      }
    }
    --remaining;
  }
  return w;
}

template <class View>
std::vector<Word> enumerate_slice_impl(const View& v, const Alphabet& alphabet,
                                       std::size_t max_len, std::size_t cap) {
  auto dist = distance_to_accepting(v, alphabet.size());
  std::vector<Word> out;
  Word prefix;

  auto emit = [&](const Word& w) {
    if (out.size() >= cap)
      throw Error(ErrorKind::SliceOverflow, "slice enumeration exceeded cap");
    out.push_back(w);
  };

  std::function<void(const std::vector<int>&)> walk = [&](const std::vector<int>& set) {
    bool acc = std::any_of(set.begin(), set.end(), [&](int q) { return v.accepting(q); });
    if (acc) emit(prefix);
    if (prefix.size() == max_len) return;
    std::size_t remaining = max_len - prefix.size();
    for (Symbol s = 0; s < alphabet.size(); ++s) {
      auto next = step_set(v, set, s);
      if (next.empty()) continue;
      if (min_distance(dist, v, next) + 1 > remaining) continue;
      prefix.push_back(s);
      walk(next);
      prefix.pop_back();
    }
  };
  walk(sorted_unique(v.starts()));
  std::sort(out.begin(), out.end(), length_lex_less);
  return out;
}

}  // namespace

int Dfa::run(int from, const Word& w) const {
  int q = from;
  for (Symbol s : w) q = step(q, s);
  return q;
}

bool Dfa::accepts(const Word& w) const {
  return accepting[static_cast<std::size_t>(run(initial, w))];
}

bool Nfa::accepts(const Word& w) const {
  NfaView v{*this};
  std::vector<int> set = sorted_unique(initials);
  for (Symbol s : w) {
    set = step_set(v, set, s);
    if (set.empty()) return false;
  }
  return std::any_of(set.begin(), set.end(),
                     [&](int q) { return accepting[static_cast<std::size_t>(q)]; });
}

Dfa determinize(const Nfa& nfa) {
  NfaView v{nfa};
  Dfa d;
  d.alphabet = nfa.alphabet;

  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> subset) {
    auto it = ids.find(subset);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(subsets.size());
    ids.emplace(subset, id);
    subsets.push_back(std::move(subset));
    d.delta.emplace_back(static_cast<std::size_t>(d.alphabet.size()), -1);
    return id;
  };

  d.initial = intern(sorted_unique(nfa.initials));
  for (int id = 0; id < static_cast<int>(subsets.size()); ++id) {
    for (Symbol s = 0; s < d.alphabet.size(); ++s) {
      auto next = step_set(v, subsets[static_cast<std::size_t>(id)], s);
      d.delta[static_cast<std::size_t>(id)][static_cast<std::size_t>(s)] = intern(std::move(next));
    }
  }
  d.accepting.resize(subsets.size(), false);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    d.accepting[i] = std::any_of(subsets[i].begin(), subsets[i].end(), [&](int q) {
      return nfa.accepting[static_cast<std::size_t>(q)];
    });
  return d;
}

Dfa minimize(const Dfa& dfa) {
  int n = dfa.state_count();
  int num_symbols = dfa.alphabet.size();

  // Reachable trim.
  std::vector<int> order;
  std::vector<int> remap(static_cast<std::size_t>(n), -1);
  order.push_back(dfa.initial);
  remap[static_cast<std::size_t>(dfa.initial)] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Symbol s = 0; s < num_symbols; ++s) {
      int t = dfa.step(order[i], s);
      if (remap[static_cast<std::size_t>(t)] < 0) {
        remap[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }

  int m = static_cast<int>(order.size());
  // Moore partition refinement on the reachable part.
  std::vector<int> cls(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) cls[static_cast<std::size_t>(i)] = dfa.accepting[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] ? 1 : 0;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_cls(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      std::vector<int> sig;
      sig.reserve(static_cast<std::size_t>(num_symbols) + 1);
      sig.push_back(cls[static_cast<std::size_t>(i)]);
      for (Symbol s = 0; s < num_symbols; ++s) {
        int t = dfa.step(order[static_cast<std::size_t>(i)], s);
        sig.push_back(cls[static_cast<std::size_t>(remap[static_cast<std::size_t>(t)])]);
      }
      auto [it, inserted] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
      next_cls[static_cast<std::size_t>(i)] = it->second;
    }
    bool stable = next_cls == cls;
    cls = std::move(next_cls);
    if (stable) break;
  }

  // Quotient, renumbered so the initial class is state 0 and the rest follow
  // in BFS order for a stable result.
  int num_cls = 1 + *std::max_element(cls.begin(), cls.end());
  std::vector<int> cls_repr(static_cast<std::size_t>(num_cls), -1);
  for (int i = 0; i < m; ++i)
    if (cls_repr[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])] < 0)
      cls_repr[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])] = i;

  std::vector<int> cls_new(static_cast<std::size_t>(num_cls), -1);
  std::vector<int> bfs;
  cls_new[static_cast<std::size_t>(cls[0])] = 0;
  bfs.push_back(cls[0]);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int c = bfs[i];
    int repr = cls_repr[static_cast<std::size_t>(c)];
    for (Symbol s = 0; s < num_symbols; ++s) {
      int t = remap[static_cast<std::size_t>(dfa.step(order[static_cast<std::size_t>(repr)], s))];
      int tc = cls[static_cast<std::size_t>(t)];
      if (cls_new[static_cast<std::size_t>(tc)] < 0) {
        cls_new[static_cast<std::size_t>(tc)] = static_cast<int>(bfs.size());
        bfs.push_back(tc);
      }
    }
  }

  Dfa out;
  out.alphabet = dfa.alphabet;
  out.delta.assign(bfs.size(), std::vector<int>(static_cast<std::size_t>(num_symbols), -1));
  out.accepting.assign(bfs.size(), false);
  out.initial = 0;
  for (std::size_t bi = 0; bi < bfs.size(); ++bi) {
    int repr = cls_repr[static_cast<std::size_t>(bfs[bi])];
    out.accepting[bi] = dfa.accepting[static_cast<std::size_t>(order[static_cast<std::size_t>(repr)])];
    for (Symbol s = 0; s < num_symbols; ++s) {
      int t = remap[static_cast<std::size_t>(dfa.step(order[static_cast<std::size_t>(repr)], s))];
      out.delta[bi][static_cast<std::size_t>(s)] = cls_new[static_cast<std::size_t>(cls[static_cast<std::size_t>(t)])];
    }
  }
  return out;
}

Dfa product(const Dfa& a, const Dfa& b, const std::function<bool(bool, bool)>& combine) {
  check_same_alphabet(a.alphabet, b.alphabet);
  int num_symbols = a.alphabet.size();

  Dfa out;
  out.alphabet = a.alphabet;
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> pairs;
  auto intern = [&](std::pair<int, int> pq) {
    auto it = ids.find(pq);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(pairs.size());
    ids.emplace(pq, id);
    pairs.push_back(pq);
    out.delta.emplace_back(static_cast<std::size_t>(num_symbols), -1);
    return id;
  };
  out.initial = intern({a.initial, b.initial});
  for (int id = 0; id < static_cast<int>(pairs.size()); ++id)
    for (Symbol s = 0; s < num_symbols; ++s) {
      auto [p, q] = pairs[static_cast<std::size_t>(id)];
      out.delta[static_cast<std::size_t>(id)][static_cast<std::size_t>(s)] =
          intern({a.step(p, s), b.step(q, s)});
    }
  out.accepting.resize(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out.accepting[i] = combine(a.accepting[static_cast<std::size_t>(pairs[i].first)],
                               b.accepting[static_cast<std::size_t>(pairs[i].second)]);
  return out;
}

Dfa complement_within(const Dfa& a, const Dfa& universe) {
  return product(universe, a, [](bool in_universe, bool in_a) { return in_universe && !in_a; });
}

Nfa star_nfa(const Dfa& dfa) {
  if (dfa.accepting[static_cast<std::size_t>(dfa.initial)])
    throw Error(ErrorKind::EpsilonInLanguage, "star construction requires ε ∉ L");

  int n = dfa.state_count();
  int num_symbols = dfa.alphabet.size();
  Nfa a;
  a.alphabet = dfa.alphabet;
  a.delta.assign(static_cast<std::size_t>(n) + 1,
                 std::vector<std::vector<int>>(static_cast<std::size_t>(num_symbols)));
  a.accepting.assign(static_cast<std::size_t>(n) + 1, false);
  a.accepting[0] = true;  // only state 0 accepts; ε ∈ L*
  a.initials = {0};
  a.state_labels.resize(static_cast<std::size_t>(n) + 1);
  a.state_labels[0] = "start";
  for (int q = 0; q < n; ++q) a.state_labels[static_cast<std::size_t>(q) + 1] = "q" + std::to_string(q);

  auto row_for = [&](int src_dfa_state, std::size_t row) {
    for (Symbol s = 0; s < num_symbols; ++s) {
      int t = dfa.step(src_dfa_state, s);
      std::vector<int>& targets = a.delta[row][static_cast<std::size_t>(s)];
      // Arrival at an accepting state closes a factor: parallel edge to 0.
      if (dfa.accepting[static_cast<std::size_t>(t)]) targets.push_back(0);
      targets.push_back(t + 1);
      std::sort(targets.begin(), targets.end());
    }
  };
  row_for(dfa.initial, 0);
  for (int q = 0; q < n; ++q) row_for(q, static_cast<std::size_t>(q) + 1);
  return a;
}

std::optional<Word> shortest_accepted(const Dfa& dfa) {
  return shortest_accepted_impl(DfaView{dfa}, dfa.alphabet);
}

std::optional<Word> shortest_accepted(const Nfa& nfa) {
  return shortest_accepted_impl(NfaView{nfa}, nfa.alphabet);
}

EquivalenceResult equivalent(const Dfa& a, const Dfa& b) {
  check_same_alphabet(a.alphabet, b.alphabet);
  int num_symbols = a.alphabet.size();

  auto differs = [&](std::pair<int, int> pq) {
    return a.accepting[static_cast<std::size_t>(pq.first)] !=
           b.accepting[static_cast<std::size_t>(pq.second)];
  };

  std::pair<int, int> start{a.initial, b.initial};
  if (differs(start)) return {false, Word{}};

  // BFS expanding symbols in declared order: the first distinguishing pair
  // reached is via the shortest, lexicographically least word.
  std::map<std::pair<int, int>, std::pair<std::pair<int, int>, Symbol>> parent;
  std::deque<std::pair<int, int>> queue;
  parent.emplace(start, std::make_pair(start, Symbol{-1}));
  queue.push_back(start);
  while (!queue.empty()) {
    auto pq = queue.front();
    queue.pop_front();
    for (Symbol s = 0; s < num_symbols; ++s) {
      std::pair<int, int> next{a.step(pq.first, s), b.step(pq.second, s)};
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(pq, s));
      if (differs(next)) {
        Word w;
        for (auto cur = next; cur != start; cur = parent.at(cur).first)
          w.push_back(parent.at(cur).second);
        std::reverse(w.begin(), w.end());
        return {false, std::move(w)};
      }
      queue.push_back(next);
    }
  }
  return {true, std::nullopt};
}

std::vector<Word> enumerate_slice(const Dfa& dfa, std::size_t max_len, std::size_t cap) {
  return enumerate_slice_impl(DfaView{dfa}, dfa.alphabet, max_len, cap);
}

std::vector<Word> enumerate_slice(const Nfa& nfa, std::size_t max_len, std::size_t cap) {
  return enumerate_slice_impl(NfaView{nfa}, nfa.alphabet, max_len, cap);
}

Dfa dfa_from_words(const Alphabet& alphabet, const std::vector<Word>& words) {
  // Trie with an explicit sink, then minimize.
  Dfa d;
  d.alphabet = alphabet;
  int num_symbols = alphabet.size();
  d.delta.emplace_back(static_cast<std::size_t>(num_symbols), -1);  // root = 0
  d.accepting.push_back(false);
  for (const Word& w : words) {
    int q = 0;
    for (Symbol s : w) {
      int& t = d.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)];
      if (t < 0) {
        t = d.state_count();
        d.delta.emplace_back(static_cast<std::size_t>(num_symbols), -1);
        d.accepting.push_back(false);
      }
      q = d.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)];
    }
    d.accepting[static_cast<std::size_t>(q)] = true;
  }
  int sink = d.state_count();
  d.delta.emplace_back(static_cast<std::size_t>(num_symbols), sink);
  d.accepting.push_back(false);
  for (auto& row : d.delta)
    for (int& t : row)
      if (t < 0) t = sink;
  d.initial = 0;
  return minimize(d);
}

Dfa empty_dfa(const Alphabet& alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  d.delta.emplace_back(static_cast<std::size_t>(alphabet.size()), 0);
  d.accepting.push_back(false);
  d.initial = 0;
  return d;
}

}  // namespace ufact
