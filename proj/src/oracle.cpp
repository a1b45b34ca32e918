#include "ufact/oracle.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace ufact {

namespace {

// Factor edges: ok[i][j-i-1] says x[i..j) ∈ L. viable[i] says position i can
// reach |x| through factor edges, so enumeration never walks dead branches.
struct Segmentation {
  std::size_t n;
  std::vector<std::vector<bool>> ok;
  std::vector<bool> viable;
};

Segmentation segment(const Word& x, const MembershipOracle& L) {
  Segmentation seg;
  seg.n = x.size();
  seg.ok.assign(seg.n, {});
  for (std::size_t i = 0; i < seg.n; ++i) {
    seg.ok[i].assign(seg.n - i, false);
    Word sub;
    for (std::size_t j = i + 1; j <= seg.n; ++j) {
      sub.push_back(x[j - 1]);
      seg.ok[i][j - i - 1] = L.test(sub);
    }
  }
  seg.viable.assign(seg.n + 1, false);
  seg.viable[seg.n] = true;
  for (std::size_t i = seg.n; i-- > 0;)
    for (std::size_t j = i + 1; j <= seg.n && !seg.viable[i]; ++j)
      if (seg.ok[i][j - i - 1] && seg.viable[j]) seg.viable[i] = true;
  return seg;
}

}  // namespace

MembershipOracle oracle_from_words(const std::vector<Word>& words, const std::string& description) {
  auto set = std::make_shared<std::set<Word>>(words.begin(), words.end());
  return {[set](const Word& w) { return set->count(w) > 0; }, description};
}

MembershipOracle oracle_from_dfa(const Dfa& dfa, const std::string& description) {
  auto copy = std::make_shared<Dfa>(dfa);
  return {[copy](const Word& w) { return copy->accepts(w); }, description};
}

FactorMultiset multiset_of(const Factorization& f) {
  FactorMultiset m;
  for (const Word& w : f.factors) ++m[w];
  return m;
}

std::set<Word> support_of(const Factorization& f) {
  return {f.factors.begin(), f.factors.end()};
}

Word concat(const Factorization& f) {
  Word out;
  for (const Word& w : f.factors) out.insert(out.end(), w.begin(), w.end());
  return out;
}

bool for_each_factorization(const Word& x, const MembershipOracle& L,
                            const std::function<bool(const Factorization&)>& visit) {
  if (L.test(Word{}))
    throw Error(ErrorKind::EpsilonInLanguage, "factorization requires ε ∉ L");
  if (x.empty()) return true;  // no representable factorization of ε

  Segmentation seg = segment(x, L);
  if (!seg.viable[0]) return true;

  Factorization current;
  bool keep_going = true;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (!keep_going) return;
    if (i == seg.n) {
      keep_going = visit(current);
      return;
    }
    for (std::size_t j = i + 1; j <= seg.n && keep_going; ++j) {
      if (!seg.ok[i][j - i - 1] || !seg.viable[j]) continue;
      current.factors.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(i),
                                   x.begin() + static_cast<std::ptrdiff_t>(j));
      walk(j);
      current.factors.pop_back();
    }
  };
  walk(0);
  return keep_going;
}

std::vector<Factorization> factorizations(const Word& x, const MembershipOracle& L,
                                          std::uint64_t cap) {
  std::vector<Factorization> out;
  bool completed = for_each_factorization(x, L, [&](const Factorization& f) {
    out.push_back(f);
    return out.size() < cap;
  });
  if (!completed)
    throw CapExceededError(out.size(), "factorization enumeration exceeded cap");
  return out;
}

std::uint64_t count_factorizations(const Word& x, const MembershipOracle& L,
                                   std::uint64_t saturate_at) {
  if (L.test(Word{}))
    throw Error(ErrorKind::EpsilonInLanguage, "factorization requires ε ∉ L");
  std::size_t n = x.size();
  std::vector<std::uint64_t> count(n + 1, 0);
  count[0] = 1;  // the empty factorization
  Word sub;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (count[i] == 0) continue;
      sub.assign(x.begin() + static_cast<std::ptrdiff_t>(i),
                 x.begin() + static_cast<std::ptrdiff_t>(j));
      if (!L.test(sub)) continue;
      count[j] = std::min(saturate_at, count[j] + count[i]);
    }
  }
  return count[n];
}

bool in_star(const Word& x, const MembershipOracle& L) {
  return count_factorizations(x, L, 1) >= 1;
}

std::string predicate_name(FactorPredicate p) {
  switch (p) {
    case FactorPredicate::Uf: return "uf";
    case FactorPredicate::Su: return "su";
    case FactorPredicate::Ufp: return "ufp";
    case FactorPredicate::Ufs: return "ufs";
  }
  return "?";
}

std::optional<FactorPredicate> predicate_from_name(const std::string& name) {
  if (name == "uf") return FactorPredicate::Uf;
  if (name == "su") return FactorPredicate::Su;
  if (name == "ufp") return FactorPredicate::Ufp;
  if (name == "ufs") return FactorPredicate::Ufs;
  return std::nullopt;
}

namespace {

void require_in_star(const Word& x, const MembershipOracle& L) {
  if (x.empty()) return;
  if (!in_star(x, L)) throw Error(ErrorKind::NotInStar, "word has no factorization over L");
}

}  // namespace

bool is_uf(const Word& x, const MembershipOracle& L) {
  if (x.empty()) return true;
  std::uint64_t c = count_factorizations(x, L, 2);
  if (c == 0) throw Error(ErrorKind::NotInStar, "word has no factorization over L");
  return c == 1;
}

bool is_su(const Word& x, const MembershipOracle& L) {
  if (L.test(Word{}))
    throw Error(ErrorKind::EpsilonInLanguage, "factorization requires ε ∉ L");
  if (x.empty()) return true;
  // Set of achievable factor counts per position; no enumeration needed.
  std::size_t n = x.size();
  std::vector<std::set<std::size_t>> counts(n + 1);
  counts[0].insert(0);
  Word sub;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (counts[i].empty()) continue;
      sub.assign(x.begin() + static_cast<std::ptrdiff_t>(i),
                 x.begin() + static_cast<std::ptrdiff_t>(j));
      if (!L.test(sub)) continue;
      for (std::size_t c : counts[i]) counts[j].insert(c + 1);
    }
  if (counts[n].empty()) throw Error(ErrorKind::NotInStar, "word has no factorization over L");
  return counts[n].size() == 1;
}

bool is_ufp(const Word& x, const MembershipOracle& L) {
  if (x.empty()) return true;
  require_in_star(x, L);
  std::optional<FactorMultiset> reference;
  bool same = true;
  for_each_factorization(x, L, [&](const Factorization& f) {
    FactorMultiset m = multiset_of(f);
    if (!reference) {
      reference = std::move(m);
      return true;
    }
    if (m != *reference) {
      same = false;
      return false;
    }
    return true;
  });
  return same;
}

bool is_ufs(const Word& x, const MembershipOracle& L) {
  if (x.empty()) return true;
  require_in_star(x, L);
  std::optional<std::set<Word>> reference;
  bool same = true;
  for_each_factorization(x, L, [&](const Factorization& f) {
    std::set<Word> s = support_of(f);
    if (!reference) {
      reference = std::move(s);
      return true;
    }
    if (s != *reference) {
      same = false;
      return false;
    }
    return true;
  });
  return same;
}

bool holds(FactorPredicate p, const Word& x, const MembershipOracle& L) {
  switch (p) {
    case FactorPredicate::Uf: return is_uf(x, L);
    case FactorPredicate::Su: return is_su(x, L);
    case FactorPredicate::Ufp: return is_ufp(x, L);
    case FactorPredicate::Ufs: return is_ufs(x, L);
  }
  return false;
}

FactorLanguage factor_language(const Alphabet& alphabet, std::vector<Word> words,
                               const std::string& description) {
  for (const Word& w : words)
    if (w.empty())
      throw Error(ErrorKind::EpsilonInLanguage, "factor language must not contain ε");
  FactorLanguage L;
  L.alphabet = alphabet;
  L.membership = oracle_from_words(words, description);
  auto shared = std::make_shared<std::vector<Word>>(std::move(words));
  L.star_slice = [shared](std::size_t max_len, std::size_t cap) {
    // Concatenation closure, shortest extensions first.
    std::set<Word> out;
    std::vector<Word> frontier{Word{}};
    out.insert(Word{});
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (const Word& w : frontier)
        for (const Word& u : *shared) {
          if (u.empty() || w.size() + u.size() > max_len) continue;
          Word v = w;
          v.insert(v.end(), u.begin(), u.end());
          if (out.insert(v).second) {
            if (out.size() > cap)
              throw Error(ErrorKind::SliceOverflow, "star slice exceeded cap");
            next.push_back(std::move(v));
          }
        }
      frontier = std::move(next);
    }
    std::vector<Word> slice(out.begin(), out.end());
    std::sort(slice.begin(), slice.end(), length_lex_less);
    return slice;
  };
  return L;
}

FactorLanguage factor_language(const Dfa& dfa, const std::string& description) {
  FactorLanguage L;
  L.alphabet = dfa.alphabet;
  L.membership = oracle_from_dfa(dfa, description);
  auto shared = std::make_shared<Dfa>(dfa);
  L.star_slice = [shared](std::size_t max_len, std::size_t cap) {
    return enumerate_slice(star_nfa(*shared), max_len, cap);
  };
  return L;
}

std::vector<Word> star_slice(const FactorLanguage& L, std::size_t max_len, std::size_t cap) {
  return L.star_slice(max_len, cap);
}

std::vector<Word> slice_by_predicate(const FactorLanguage& L, FactorPredicate p,
                                     std::size_t max_len, std::size_t cap) {
  std::vector<Word> out;
  for (const Word& x : star_slice(L, max_len, cap))
    if (holds(p, x, L.membership)) out.push_back(x);
  return out;
}

std::optional<Word> shortest_violation(const FactorLanguage& L, FactorPredicate p,
                                       std::size_t max_len, std::size_t cap) {
  for (const Word& x : star_slice(L, max_len, cap))
    if (!holds(p, x, L.membership)) return x;
  return std::nullopt;
}

}  // namespace ufact
