#include "ufact/uf_engine.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ufact {

Nfa build_double_nfa(const Dfa& m) {
  if (m.accepting[static_cast<std::size_t>(m.initial)])
    throw Error(ErrorKind::EpsilonInLanguage,
                "ε ∈ L: no word of L* has a unique factorization, uf(L) = ∅");

  int n = m.state_count();
  int num_symbols = m.alphabet.size();
  auto pair_id = [n](int p, int q) { return n + p * n + q; };

  Nfa out;
  out.alphabet = m.alphabet;
  int total = n + n * n;
  out.delta.assign(static_cast<std::size_t>(total),
                   std::vector<std::vector<int>>(static_cast<std::size_t>(num_symbols)));
  out.accepting.assign(static_cast<std::size_t>(total), false);
  out.initials = {m.initial};
  out.state_labels.resize(static_cast<std::size_t>(total));
  for (int q = 0; q < n; ++q) out.state_labels[static_cast<std::size_t>(q)] = "q" + std::to_string(q);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      out.state_labels[static_cast<std::size_t>(pair_id(p, q))] =
          "[" + std::to_string(p) + "," + std::to_string(q) + "]";

  auto is_final = [&](int q) { return m.accepting[static_cast<std::size_t>(q)]; };

  for (Symbol a = 0; a < num_symbols; ++a) {
    int t0 = m.step(m.initial, a);
    // Single states: a shared factorization prefix. At an accepting state
    // the shared run may close the factor here, keep extending it, or split
    // into two runs that disagree on this boundary.
    for (int q = 0; q < n; ++q) {
      int r = m.step(q, a);
      std::vector<int>& targets = out.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)];
      if (!is_final(q)) {
        targets = {r};
      } else {
        targets = {r, t0, pair_id(t0, r)};
      }
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }
    // Pair states: both runs advance; an accepting coordinate may close its
    // factor (reset through the initial state) independently.
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        int r = m.step(p, a);
        int s = m.step(q, a);
        std::vector<int> targets{pair_id(r, s)};
        if (is_final(p)) targets.push_back(pair_id(t0, s));
        if (is_final(q)) targets.push_back(pair_id(r, t0));
        if (is_final(p) && is_final(q)) targets.push_back(pair_id(t0, t0));
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        out.delta[static_cast<std::size_t>(pair_id(p, q))][static_cast<std::size_t>(a)] =
            std::move(targets);
      }
  }

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (is_final(p) && is_final(q))
        out.accepting[static_cast<std::size_t>(pair_id(p, q))] = true;
  return out;
}

Dfa uf_dfa(const Dfa& m) {
  if (m.accepting[static_cast<std::size_t>(m.initial)]) return empty_dfa(m.alphabet);
  Dfa star = minimize(determinize(star_nfa(m)));
  Dfa ambiguous = minimize(determinize(build_double_nfa(m)));
  return minimize(complement_within(ambiguous, star));
}

namespace {

// Row-major saturating matrix over {0,1,2}; the monoid element reached by a
// word counts its start→start paths in the star NFA, capped at 2.
using SatMatrix = std::vector<std::uint8_t>;

SatMatrix sat_product(const SatMatrix& a, const SatMatrix& b, int k) {
  SatMatrix c(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      std::uint8_t ail = a[static_cast<std::size_t>(i * k + l)];
      if (ail == 0) continue;
      for (int j = 0; j < k; ++j) {
        std::uint8_t& cij = c[static_cast<std::size_t>(i * k + j)];
        if (cij == 2) continue;
        unsigned v = cij + ail * b[static_cast<std::size_t>(l * k + j)];
        cij = static_cast<std::uint8_t>(v > 2 ? 2 : v);
      }
    }
  return c;
}

}  // namespace

Dfa matrix_uf_dfa(const Dfa& m, std::size_t matrix_cap) {
  Nfa star = star_nfa(m);  // throws when ε ∈ L
  int k = star.state_count();
  int num_symbols = m.alphabet.size();

  std::vector<SatMatrix> letter(static_cast<std::size_t>(num_symbols),
                                SatMatrix(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0));
  for (int p = 0; p < k; ++p)
    for (Symbol a = 0; a < num_symbols; ++a)
      for (int t : star.targets(p, a))
        letter[static_cast<std::size_t>(a)][static_cast<std::size_t>(p * k + t)] = 1;

  SatMatrix identity(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) identity[static_cast<std::size_t>(i * k + i)] = 1;

  Dfa out;
  out.alphabet = m.alphabet;
  std::map<SatMatrix, int> ids;
  std::vector<SatMatrix> mats;
  auto intern = [&](SatMatrix mat) {
    auto it = ids.find(mat);
    if (it != ids.end()) return it->second;
    if (mats.size() >= matrix_cap)
      throw Error(ErrorKind::StateExplosion, "matrix construction exceeded reachable-matrix cap");
    int id = static_cast<int>(mats.size());
    ids.emplace(mat, id);
    mats.push_back(std::move(mat));
    out.delta.emplace_back(static_cast<std::size_t>(num_symbols), -1);
    return id;
  };

  out.initial = intern(identity);
  for (int id = 0; id < static_cast<int>(mats.size()); ++id)
    for (Symbol a = 0; a < num_symbols; ++a) {
      SatMatrix next = sat_product(mats[static_cast<std::size_t>(id)],
                                   letter[static_cast<std::size_t>(a)], k);
      out.delta[static_cast<std::size_t>(id)][static_cast<std::size_t>(a)] = intern(std::move(next));
    }

  // Start state of the star NFA is index 0: accept iff exactly one
  // start→start path.
  out.accepting.resize(mats.size(), false);
  for (std::size_t i = 0; i < mats.size(); ++i) out.accepting[i] = mats[i][0] == 1;
  return out;
}

CodeCheck is_code(const Dfa& m) {
  if (m.accepting[static_cast<std::size_t>(m.initial)]) {
    // ε ∈ L: every nonempty word of L+ already factors ambiguously via ε
    // padding; by convention report the shortest word of L+ if any, else ε
    // has no second factorization and L = {ε} is a code of sorts. The
    // engines upstream reject this case; keep the check total anyway.
    auto w = shortest_accepted(m);
    if (w && !w->empty()) return {false, w};
    return {true, std::nullopt};
  }
  Nfa doubled = build_double_nfa(m);
  auto witness = shortest_accepted(doubled);
  if (!witness) return {true, std::nullopt};
  std::size_t n = static_cast<std::size_t>(m.state_count());
  if (witness->size() >= n * n + n)
    throw Error(ErrorKind::StateExplosion,
                "ambiguous witness exceeds the n²+n bound; construction is broken");
  return {false, witness};
}

namespace {

// PALSTAR machinery, all by direct dynamic programming on the word.
struct PalstarAnalysis {
  bool palstar = false;
  bool primepalstar = false;
  bool unique_factorization = false;  // into PALSTAR elements
};

PalstarAnalysis analyze_palstar(const Word& w) {
  std::size_t n = w.size();
  PalstarAnalysis out;
  if (n == 0) return out;

  // pal[i][j]: w[i..j) is a nonempty even-length palindrome.
  std::vector<std::vector<bool>> pal(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j <= n; j += 2) {
      bool ok = true;
      for (std::size_t k = 0; ok && k < (j - i) / 2; ++k)
        if (w[i + k] != w[j - 1 - k]) ok = false;
      pal[i][j] = ok;
    }

  // palstar[i][j]: w[i..j) is a concatenation of ≥1 even palindromes.
  std::vector<std::vector<bool>> palstar(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (pal[i][j]) {
        palstar[i][j] = true;
        continue;
      }
      for (std::size_t k = i + 2; k < j && !palstar[i][j]; k += 2)
        if (pal[i][k] && palstar[k][j]) palstar[i][j] = true;
    }

  out.palstar = palstar[0][n];
  if (out.palstar) {
    out.primepalstar = true;
    for (std::size_t k = 1; k < n && out.primepalstar; ++k)
      if (palstar[0][k] && palstar[k][n]) out.primepalstar = false;
  }

  // Factorizations into PALSTAR elements (not single palindromes),
  // saturated at 2.
  std::vector<std::uint64_t> count(n + 1, 0);
  count[0] = 1;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (count[i] > 0 && palstar[i][j]) count[j] = std::min<std::uint64_t>(2, count[j] + count[i]);
  out.unique_factorization = count[n] == 1;
  return out;
}

}  // namespace

CheckReport palstar_uf_check(std::size_t max_len) {
  CheckReport report;
  if (max_len > 20) {
    report.fail("max_len " + std::to_string(max_len) + " exceeds the desk-scale limit 20");
    return report;
  }
  Alphabet binary({"a", "b"});
  std::size_t palstar_count = 0, prime_count = 0, uf_count = 0, mismatches = 0;

  // All nonempty binary words up to max_len. ε is outside PALSTAR by
  // definition and is excluded from the comparison.
  Word w;
  std::function<void()> visit = [&]() {
    if (!w.empty()) {
      PalstarAnalysis a = analyze_palstar(w);
      palstar_count += a.palstar;
      prime_count += a.primepalstar;
      uf_count += a.unique_factorization;
      if (a.unique_factorization != a.primepalstar) {
        ++mismatches;
        if (mismatches <= 5)
          report.fail("uf/primepalstar disagree on '" + binary.format(w) + "'");
      }
    }
    if (w.size() == max_len) return;
    for (Symbol s = 0; s < 2; ++s) {
      w.push_back(s);
      visit();
      w.pop_back();
    }
  };
  visit();

  report.note("words ≤ " + std::to_string(max_len) + ": palstar=" + std::to_string(palstar_count) +
              " primepalstar=" + std::to_string(prime_count) + " uf=" + std::to_string(uf_count));
  report.require(mismatches == 0, "uf(PALSTAR) coincides with PRIMEPALSTAR on all " +
                                      std::to_string(max_len) + "-bounded nonempty words");
  return report;
}

}  // namespace ufact
