#include "ufact/ufs_engine.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>

#include "ufact/families.hpp"
#include "ufact/language_spec.hpp"

namespace ufact {

namespace {

// One factorization in progress: current word, consumed prefix length,
// used-word bit vector.
struct Run {
  int word;
  int pos;
  std::uint64_t used;

  auto tie() const { return std::tie(word, pos, used); }
  bool operator<(const Run& o) const { return tie() < o.tie(); }
};

using Tuple6 = std::pair<Run, Run>;

}  // namespace

Nfa build_ufs_nfa(const Alphabet& alphabet, const std::vector<Word>& words) {
  int n = static_cast<int>(words.size());
  if (n > 64) throw Error(ErrorKind::StateExplosion, "ufs construction supports at most 64 words");
  for (const Word& w : words)
    if (w.empty()) throw Error(ErrorKind::EpsilonInLanguage, "ε ∈ L: ufs construction requires ε ∉ L");

  std::map<Tuple6, int> ids;
  std::vector<Tuple6> states;
  auto intern = [&](const Tuple6& key) {
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(states.size());
    ids.emplace(key, id);
    states.push_back(key);
    return id;
  };

  Nfa out;
  out.alphabet = alphabet;

  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      out.initials.push_back(intern({Run{w, 0, 1ull << w}, Run{x, 0, 1ull << x}}));

  // Reload closure: every way to replace finished words by fresh ones so
  // that both runs have a pending symbol.
  auto expansions = [&](const Tuple6& t) {
    std::vector<Tuple6> out1;
    bool done1 = t.first.pos == static_cast<int>(words[static_cast<std::size_t>(t.first.word)].size());
    if (done1) {
      for (int w = 0; w < n; ++w)
        out1.push_back({Run{w, 0, t.first.used | (1ull << w)}, t.second});
    } else {
      out1.push_back(t);
    }
    std::vector<Tuple6> out2;
    for (const Tuple6& u : out1) {
      bool done2 = u.second.pos == static_cast<int>(words[static_cast<std::size_t>(u.second.word)].size());
      if (done2) {
        for (int w = 0; w < n; ++w)
          out2.push_back({u.first, Run{w, 0, u.second.used | (1ull << w)}});
      } else {
        out2.push_back(u);
      }
    }
    return out2;
  };

  std::vector<std::vector<std::vector<int>>> delta;
  for (int id = 0; id < static_cast<int>(states.size()); ++id) {
    delta.resize(states.size(), std::vector<std::vector<int>>(static_cast<std::size_t>(alphabet.size())));
    Tuple6 st = states[static_cast<std::size_t>(id)];
    for (const Tuple6& u : expansions(st)) {
      const Word& w1 = words[static_cast<std::size_t>(u.first.word)];
      const Word& w2 = words[static_cast<std::size_t>(u.second.word)];
      Symbol a1 = w1[static_cast<std::size_t>(u.first.pos)];
      Symbol a2 = w2[static_cast<std::size_t>(u.second.pos)];
      if (a1 != a2) continue;
      Tuple6 next{Run{u.first.word, u.first.pos + 1, u.first.used},
                  Run{u.second.word, u.second.pos + 1, u.second.used}};
      delta[static_cast<std::size_t>(id)][static_cast<std::size_t>(a1)].push_back(intern(next));
    }
  }
  delta.resize(states.size(), std::vector<std::vector<int>>(static_cast<std::size_t>(alphabet.size())));
  for (auto& row : delta)
    for (auto& targets : row) {
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }
  out.delta = std::move(delta);

  out.accepting.assign(states.size(), false);
  out.state_labels.resize(states.size());
  auto vec_string = [&](std::uint64_t used) {
    std::string s;
    for (int i = 0; i < n; ++i) s += (used >> i) & 1 ? '1' : '0';
    return s;
  };
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& [r1, r2] = states[i];
    const Word& w1 = words[static_cast<std::size_t>(r1.word)];
    const Word& w2 = words[static_cast<std::size_t>(r2.word)];
    bool done1 = r1.pos == static_cast<int>(w1.size());
    bool done2 = r2.pos == static_cast<int>(w2.size());
    out.accepting[i] = done1 && done2 && r1.used != r2.used;
    Word s1(w1.begin() + r1.pos, w1.end());
    Word s2(w2.begin() + r2.pos, w2.end());
    out.state_labels[i] = "(" + alphabet.format(w1) + "|" + alphabet.format(s1) + "|" +
                          vec_string(r1.used) + "‖" + alphabet.format(w2) + "|" +
                          alphabet.format(s2) + "|" + vec_string(r2.used) + ")";
  }
  return out;
}

Dfa ufs_dfa(const Alphabet& alphabet, const std::vector<Word>& words) {
  Dfa language = dfa_from_words(alphabet, words);
  Dfa star = minimize(determinize(star_nfa(language)));
  Dfa not_ufs = minimize(determinize(build_ufs_nfa(alphabet, words)));
  return minimize(complement_within(not_ufs, star));
}

std::optional<UfsViolation> shortest_ufs_violation(const Alphabet& alphabet,
                                                   const std::vector<Word>& words) {
  Nfa nfa = build_ufs_nfa(alphabet, words);
  auto witness = shortest_accepted(nfa);
  if (!witness) return std::nullopt;
  std::size_t n = words.size();
  std::size_t m = 0;
  for (const Word& w : words) m = std::max(m, w.size());
  std::size_t bound = 2 * m * m * n * n;
  if (witness->size() > bound)
    throw Error(ErrorKind::StateExplosion,
                "ufs witness exceeds the 2m²n² bound; construction is broken");
  return UfsViolation{*witness, bound};
}

CheckReport ufs_regular_witness_check(int r_max) {
  CheckReport report;
  if (r_max > 3) {
    report.fail("r_max " + std::to_string(r_max) + " exceeds the desk-scale limit 3");
    return report;
  }

  FamilyInstance family = ufs_regular_language();
  Dfa language = spec_dfa(family.language);
  MembershipOracle L = oracle_from_dfa(language, "ufs regular witness language");

  for (int r = 1; r <= r_max; ++r)
    for (int s = 1; s <= r_max; ++s)
      for (int t = 1; t <= r_max; ++t)
        for (int q = 1; q <= r_max; ++q) {
          Word w = bell_target_word(r, s, t, q);  // same word shape as the ufp witness
          bool expect_member = r == t && s == q;
          bool member = is_ufs(w, L);
          report.require(member == expect_member,
                         "(r,s,t,q)=(" + std::to_string(r) + "," + std::to_string(s) + "," +
                             std::to_string(t) + "," + std::to_string(q) + "): ufs " +
                             (member ? "yes" : "no"));
          auto facts = factorizations(w, L);
          report.require(facts.size() >= 2, "  has ≥ 2 factorizations (" +
                                                std::to_string(facts.size()) + " found)");
        }
  return report;
}

}  // namespace ufact
