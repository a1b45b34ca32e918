#include "ufact/ufp_engine.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ufact/families.hpp"

namespace ufact {

namespace {

constexpr int kTop = 0;
constexpr int kBottom = 1;

// (word1, consumed1, word2, consumed2, t, flag) while both runs are live;
// end-phase states are tagged separately.
struct TrackKey {
  int w1, p1, w2, p2, t, flag;
  int phase;  // 0 = running, 1 = run-1 counted at end, 2 = final

  auto tie() const { return std::tie(phase, w1, p1, w2, p2, t, flag); }
  bool operator<(const TrackKey& o) const { return tie() < o.tie(); }
};

}  // namespace

OneCounterPda build_ufp_counter_machine(const Alphabet& alphabet,
                                        const std::vector<Word>& words) {
  for (const Word& w : words)
    if (w.empty()) throw Error(ErrorKind::EpsilonInLanguage, "ε ∈ L: ufp machine requires ε ∉ L");

  OneCounterPda pda;
  pda.alphabet = alphabet;
  pda.accept_condition = OneCounterPda::AcceptCondition::CounterNonzero;

  int n = static_cast<int>(words.size());
  std::map<TrackKey, int> ids;
  std::vector<TrackKey> states;
  auto intern = [&](TrackKey key) {
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(states.size());
    ids.emplace(key, id);
    states.push_back(key);
    return id;
  };

  for (int t = 0; t < n; ++t)
    for (int w1 = 0; w1 < n; ++w1)
      for (int w2 = 0; w2 < n; ++w2)
        pda.initials.push_back(intern({w1, 0, w2, 0, t, kTop, 0}));

  // Counter move toward the flag side for a +1 completion on `side`
  // (0 = run 1, 1 = run 2); emits one or two moves.
  auto emit_counted = [&](int from, std::optional<Symbol> input, int side, int flag,
                          auto make_target) {
    int d = side == 0 ? +1 : -1;
    int e = flag == kTop ? d : -d;
    if (e == 1) {
      pda.moves.push_back({from, input, CounterTest::Any, +1, make_target(flag)});
    } else {
      pda.moves.push_back({from, input, CounterTest::Nonzero, -1, make_target(flag)});
      pda.moves.push_back({from, input, CounterTest::Zero, +1, make_target(1 - flag)});
    }
  };

  for (int id = 0; id < static_cast<int>(states.size()); ++id) {
    TrackKey st = states[static_cast<std::size_t>(id)];
    if (st.phase == 1) {
      // Count run 2's final factor, then stop.
      bool counted = st.w2 == st.t;
      auto target = [&](int flag) { return intern({0, 0, 0, 0, st.t, flag, 2}); };
      if (counted)
        emit_counted(id, std::nullopt, 1, st.flag, target);
      else
        pda.moves.push_back({id, std::nullopt, CounterTest::Any, 0, target(st.flag)});
      continue;
    }
    if (st.phase == 2) continue;

    const Word& word1 = words[static_cast<std::size_t>(st.w1)];
    const Word& word2 = words[static_cast<std::size_t>(st.w2)];
    bool done1 = st.p1 == static_cast<int>(word1.size());
    bool done2 = st.p2 == static_cast<int>(word2.size());

    if (done1) {
      // Reload run 1 with any next word, counting the completed factor.
      for (int w = 0; w < n; ++w) {
        auto target = [&](int flag) {
          return intern({w, 0, st.w2, st.p2, st.t, flag, 0});
        };
        if (st.w1 == st.t)
          emit_counted(id, std::nullopt, 0, st.flag, target);
        else
          pda.moves.push_back({id, std::nullopt, CounterTest::Any, 0, target(st.flag)});
      }
    }
    if (done2) {
      for (int w = 0; w < n; ++w) {
        auto target = [&](int flag) {
          return intern({st.w1, st.p1, w, 0, st.t, flag, 0});
        };
        if (st.w2 == st.t)
          emit_counted(id, std::nullopt, 1, st.flag, target);
        else
          pda.moves.push_back({id, std::nullopt, CounterTest::Any, 0, target(st.flag)});
      }
    }
    if (done1 && done2) {
      // End of input: count run 1's final factor, hand to phase 1.
      auto target = [&](int flag) {
        return intern({0, 0, st.w2, 0, st.t, flag, 1});
      };
      if (st.w1 == st.t)
        emit_counted(id, std::nullopt, 0, st.flag, target);
      else
        pda.moves.push_back({id, std::nullopt, CounterTest::Any, 0, target(st.flag)});
    }
    if (!done1 && !done2) {
      Symbol a1 = word1[static_cast<std::size_t>(st.p1)];
      Symbol a2 = word2[static_cast<std::size_t>(st.p2)];
      if (a1 == a2)
        pda.moves.push_back({id, a1, CounterTest::Any, 0,
                             intern({st.w1, st.p1 + 1, st.w2, st.p2 + 1, st.t, st.flag, 0})});
    }
  }

  pda.state_count = static_cast<int>(states.size());
  pda.accepting.assign(states.size(), false);
  pda.state_labels.resize(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    TrackKey st = states[i];
    if (st.phase == 2) {
      pda.accepting[i] = true;
      pda.state_labels[i] = "accept(t=" + alphabet.format(words[static_cast<std::size_t>(st.t)]) +
                            "," + (st.flag == kTop ? "t" : "b") + ")";
    } else if (st.phase == 1) {
      pda.state_labels[i] = "end2(" + alphabet.format(words[static_cast<std::size_t>(st.w2)]) + ")";
    } else {
      const Word& w1 = words[static_cast<std::size_t>(st.w1)];
      const Word& w2 = words[static_cast<std::size_t>(st.w2)];
      Word s1(w1.begin() + st.p1, w1.end());
      Word s2(w2.begin() + st.p2, w2.end());
      pda.state_labels[i] = "(" + alphabet.format(w1) + "|" + alphabet.format(s1) + "‖" +
                            alphabet.format(w2) + "|" + alphabet.format(s2) +
                            "|t=" + alphabet.format(words[static_cast<std::size_t>(st.t)]) + ")";
    }
  }
  return pda;
}

std::vector<Word> ufp_slice(const Alphabet& alphabet, const std::vector<Word>& words,
                            std::size_t max_len, std::size_t cap) {
  return slice_by_predicate(factor_language(alphabet, words), FactorPredicate::Ufp, max_len, cap);
}

CheckReport bell_intersection_check(int r_max) {
  CheckReport report;
  if (r_max > 3) {
    report.fail("r_max " + std::to_string(r_max) + " exceeds the desk-scale limit 3");
    return report;
  }

  FamilyInstance bell = bell_language();
  const Alphabet& sigma = bell.language.alphabet;
  MembershipOracle L = oracle_from_words(bell.language.words);

  for (int r = 1; r <= r_max; ++r)
    for (int s = 1; s <= r_max; ++s)
      for (int t = 1; t <= r_max; ++t)
        for (int q = 1; q <= r_max; ++q) {
          Word w = bell_target_word(r, s, t, q);
          bool expect_member = r == t && s == q;
          bool member = is_ufp(w, L);
          report.require(member == expect_member,
                         "(r,s,t,q)=(" + std::to_string(r) + "," + std::to_string(s) + "," +
                             std::to_string(t) + "," + std::to_string(q) + "): ufp " +
                             (member ? "yes" : "no"));

          auto facts = factorizations(w, L);
          std::vector<std::vector<Word>> expected{
              bell_factorization_shape_one(r, s, t, q).factors,
              bell_factorization_shape_two(r, s, t, q).factors};
          std::sort(expected.begin(), expected.end());
          std::vector<std::vector<Word>> actual;
          for (const auto& f : facts) actual.push_back(f.factors);
          std::sort(actual.begin(), actual.end());
          report.require(actual == expected,
                         "  exactly the two expected factorization shapes (" +
                             std::to_string(facts.size()) + " found)");
          (void)sigma;
        }
  return report;
}

}  // namespace ufact
