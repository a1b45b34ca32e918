#include "ufact/families.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "ufact/uf_engine.hpp"
#include "ufact/ufp_engine.hpp"
#include "ufact/ufs_engine.hpp"

namespace ufact {

namespace {

void append(Word& w, const Word& part, int times = 1) {
  for (int i = 0; i < times; ++i) w.insert(w.end(), part.begin(), part.end());
}

std::string require_positive(int n, int lo, const std::string& family) {
  if (n < lo)
    throw Error(ErrorKind::Parse, family + " requires n ≥ " + std::to_string(lo));
  return family + "(n=" + std::to_string(n) + ")";
}

FamilyClaim code_witness_claim(const LanguageSpec& spec, const Word& expected_witness) {
  return {"shortest ambiguous word is " + spec.alphabet.format(expected_witness) +
              " (length " + std::to_string(expected_witness.size()) + ")",
          [spec, expected_witness](std::string& detail) {
            CodeCheck check = is_code(spec_dfa(spec));
            if (check.code) {
              detail = "language is a code, no ambiguous word";
              return false;
            }
            detail = "witness " + spec.alphabet.format(*check.witness) + " (length " +
                     std::to_string(check.witness->size()) + ")";
            return *check.witness == expected_witness;
          }};
}

FamilyClaim dfa_size_claim(const LanguageSpec& spec, int bound) {
  return {"minimal DFA has at most " + std::to_string(bound) + " states",
          [spec, bound](std::string& detail) {
            int states = spec_dfa(spec).state_count();
            detail = std::to_string(states) + " states";
            return states <= bound;
          }};
}

}  // namespace

Word prop3_ambiguous_word(int n) {
  Alphabet sigma({"a", "b"});
  Word w;
  w.push_back(sigma.require("b"));
  append(w, Word(static_cast<std::size_t>(n * (n + 1)), sigma.require("a")));
  w.push_back(sigma.require("b"));
  return w;
}

FamilyInstance prop3_family(int n) {
  FamilyInstance fam;
  fam.name = require_positive(n, 2, "prop3");
  fam.parameter = n;
  fam.language.kind = LanguageSpec::Kind::Regex;
  fam.language.alphabet = Alphabet({"a", "b"});
  std::string an(static_cast<std::size_t>(n), 'a');
  fam.language.pattern = "b(" + an + ")*|(" + an + "a)*b";

  fam.claims.push_back(code_witness_claim(fam.language, prop3_ambiguous_word(n)));
  fam.claims.push_back(dfa_size_claim(fam.language, 2 * n + 5));
  return fam;
}

namespace {

Alphabet prop5_alphabet(int n) {
  std::vector<std::string> tokens;
  for (int i = 1; i <= n; ++i) tokens.push_back("a" + std::to_string(i));
  tokens.emplace_back("b");
  return Alphabet(tokens);
}

std::vector<Word> prop5_words(int n) {
  Alphabet sigma = prop5_alphabet(n);
  Symbol b = sigma.require("b");
  auto letter = [&](int i) { return sigma.require("a" + std::to_string(i)); };

  std::vector<Word> words;
  words.push_back({letter(1)});
  words.push_back({letter(n)});
  for (int i = 1; i < n; ++i) {
    Word w(static_cast<std::size_t>(i), b);
    w.push_back(letter(i + 1));
    words.push_back(std::move(w));
  }
  for (int i = 1; i < n; ++i) {
    Word w{letter(i)};
    append(w, Word(static_cast<std::size_t>(i), b));
    words.push_back(std::move(w));
  }
  return words;
}

}  // namespace

Word prop5_ambiguous_word(int n) {
  Alphabet sigma = prop5_alphabet(n);
  Symbol b = sigma.require("b");
  Word w;
  for (int i = 1; i <= n; ++i) {
    w.push_back(sigma.require("a" + std::to_string(i)));
    if (i < n) append(w, Word(static_cast<std::size_t>(i), b));
  }
  return w;
}

FamilyInstance prop5_family(int n) {
  FamilyInstance fam;
  fam.name = require_positive(n, 2, "prop5");
  fam.parameter = n;
  fam.language.kind = LanguageSpec::Kind::Finite;
  fam.language.alphabet = prop5_alphabet(n);
  fam.language.words = prop5_words(n);

  int expected_words = 2 * n;
  fam.claims.push_back({"language has exactly " + std::to_string(expected_words) + " words",
                        [spec = fam.language, expected_words](std::string& detail) {
                          std::set<Word> dedup(spec.words.begin(), spec.words.end());
                          detail = std::to_string(dedup.size()) + " distinct words";
                          return static_cast<int>(dedup.size()) == expected_words;
                        }});
  fam.claims.push_back(code_witness_claim(fam.language, prop5_ambiguous_word(n)));
  fam.claims.push_back(dfa_size_claim(fam.language, 2 * n + 2));
  return fam;
}

FamilyInstance prop5_recoded(int n) {
  FamilyInstance fam;
  fam.name = require_positive(n, 2, "prop5-recoded") + " over {0,1,b}";
  fam.parameter = n;
  fam.language.kind = LanguageSpec::Kind::Finite;
  fam.language.alphabet = Alphabet({"0", "1", "b"});

  int width = static_cast<int>(std::bit_width(static_cast<unsigned>(n)));
  Alphabet source = prop5_alphabet(n);
  Symbol zero = fam.language.alphabet.require("0");
  Symbol one = fam.language.alphabet.require("1");
  Symbol b = fam.language.alphabet.require("b");

  auto recode_letter = [&](Symbol s) {
    Word block;
    if (source.token(s) == "b") {
      block.push_back(b);
      return block;
    }
    int value = s + 1;  // a_i is declared at index i-1
    for (int bit = width - 1; bit >= 0; --bit)
      block.push_back((value >> bit) & 1 ? one : zero);
    return block;
  };
  for (const Word& w : prop5_words(n)) {
    Word recoded;
    for (Symbol s : w) append(recoded, recode_letter(s));
    fam.language.words.push_back(std::move(recoded));
  }

  fam.claims.push_back({"recoding keeps the 2n words distinct",
                        [spec = fam.language, n](std::string& detail) {
                          std::set<Word> dedup(spec.words.begin(), spec.words.end());
                          detail = std::to_string(dedup.size()) + " distinct words";
                          return static_cast<int>(dedup.size()) == 2 * n;
                        }});
  fam.claims.push_back({"still a non-code; witness length measured",
                        [spec = fam.language, n](std::string& detail) {
                          CodeCheck check = is_code(spec_dfa(spec));
                          if (check.code) {
                            detail = "unexpectedly a code";
                            return false;
                          }
                          double ratio = static_cast<double>(check.witness->size()) /
                                         (static_cast<double>(n) * static_cast<double>(n));
                          detail = "witness length " + std::to_string(check.witness->size()) +
                                   ", length/n² = " + std::to_string(ratio);
                          return true;
                        }});
  return fam;
}

namespace {

Alphabet thm8_alphabet() { return Alphabet({"a", "b", "c", "d", "0", "1", "2", "3"}); }

FamilyClaim term_count_claim(const std::string& label, const Word& target,
                             const MembershipOracle& L, std::vector<std::size_t> expected_counts,
                             bool expect_su) {
  return {label,
          [=](std::string& detail) {
            auto facts = factorizations(target, L);
            std::multiset<std::size_t> counts;
            for (const auto& f : facts) counts.insert(f.factors.size());
            std::multiset<std::size_t> expected(expected_counts.begin(), expected_counts.end());
            bool su = is_su(target, L);
            detail = std::to_string(facts.size()) + " factorizations, term counts {";
            bool first = true;
            for (std::size_t c : counts) {
              if (!first) detail += ",";
              detail += std::to_string(c);
              first = false;
            }
            detail += "}, su " + std::string(su ? "yes" : "no");
            return counts == expected && su == expect_su;
          }};
}

}  // namespace

Word thm8_target_word(int i, int j, int k) {
  Alphabet sigma = thm8_alphabet();
  Word w;
  w.push_back(sigma.require("a"));
  append(w, {sigma.require("0")}, i);
  w.push_back(sigma.require("b"));
  append(w, {sigma.require("1")}, j);
  w.push_back(sigma.require("c"));
  append(w, {sigma.require("2"), sigma.require("3")}, k + 1);
  w.push_back(sigma.require("d"));
  return w;
}

FamilyInstance thm8_language() {
  FamilyInstance fam;
  fam.name = "thm8";
  fam.language.kind = LanguageSpec::Kind::Regex;
  fam.language.alphabet = thm8_alphabet();
  fam.language.pattern = "a0+b|1|c(23)+|23d|a|0|b1+c(23)+|a0+b1+c2|32|3d";

  MembershipOracle L = oracle_from_dfa(spec_dfa(fam.language), "thm8 language");
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) {
        std::string label = "a0^" + std::to_string(i) + "b1^" + std::to_string(j) + "c(23)^" +
                            std::to_string(k + 1) + "d: 3 factorizations, counts {i+3,j+3,k+2}, su iff i=j=k-1";
        bool expect_su = i == j && j == k - 1;
        fam.claims.push_back(term_count_claim(
            label, thm8_target_word(i, j, k), L,
            {static_cast<std::size_t>(i) + 3, static_cast<std::size_t>(j) + 3,
             static_cast<std::size_t>(k) + 2},
            expect_su));
      }
  return fam;
}

namespace {

Alphabet thm9_alphabet() {
  std::vector<std::string> tokens;
  for (char c = '0'; c <= '8'; ++c) tokens.emplace_back(1, c);
  for (char c = 'a'; c <= 'l'; ++c) tokens.emplace_back(1, c);
  return Alphabet(tokens);
}

std::vector<Word> thm9_words() {
  Alphabet sigma = thm9_alphabet();
  std::vector<std::string> texts{
      // L1
      "0ab", "cd", "ab", "cd127", "efgh", "efgh3", "4ijkl", "ijkl", "5", "68",
      // L2
      "0abc", "dabc", "d1", "27e", "fg", "he", "h34ij", "klij", "kl568",
      // L3
      "0a", "bcda", "bcd12", "7ef", "ghef", "gh34i", "jk", "li", "jkl56", "8"};
  std::vector<Word> words;
  for (const std::string& t : texts) words.push_back(sigma.word(t));
  return words;
}

}  // namespace

Word thm9_target_word(int m, int n, int p) {
  Alphabet sigma = thm9_alphabet();
  Word w = sigma.word("0");
  append(w, sigma.word("abcd"), m);
  append(w, sigma.word("127"));
  append(w, sigma.word("efgh"), n);
  append(w, sigma.word("34"));
  append(w, sigma.word("ijkl"), p);
  append(w, sigma.word("568"));
  return w;
}

FamilyInstance thm9_language() {
  FamilyInstance fam;
  fam.name = "thm9";
  fam.language.kind = LanguageSpec::Kind::Finite;
  fam.language.alphabet = thm9_alphabet();
  fam.language.words = thm9_words();

  fam.claims.push_back({"29 words over 21 letters",
                        [spec = fam.language](std::string& detail) {
                          std::set<Word> dedup(spec.words.begin(), spec.words.end());
                          detail = std::to_string(dedup.size()) + " words, " +
                                   std::to_string(spec.alphabet.size()) + " letters";
                          return dedup.size() == 29 && spec.alphabet.size() == 21;
                        }});
  MembershipOracle L = oracle_from_words(fam.language.words, "thm9 language");
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (int p = 1; p <= 2; ++p) {
        std::string label = "0(abcd)^" + std::to_string(m) + "127(efgh)^" + std::to_string(n) +
                            "34(ijkl)^" + std::to_string(p) +
                            "568: 3 factorizations, counts {2m+n+p+2, m+2n+p+2, m+n+2p+2}, su iff m=n=p";
        bool expect_su = m == n && n == p;
        fam.claims.push_back(term_count_claim(
            label, thm9_target_word(m, n, p), L,
            {static_cast<std::size_t>(2 * m + n + p + 2), static_cast<std::size_t>(m + 2 * n + p + 2),
             static_cast<std::size_t>(m + n + 2 * p + 2)},
            expect_su));
      }
  return fam;
}

namespace {

Alphabet bell_alphabet() { return Alphabet({"a", "b", "c"}); }

std::vector<Word> bell_words() {
  Alphabet sigma = bell_alphabet();
  return {sigma.word("aa"), sigma.word("aaa"), sigma.word("ab"),
          sigma.word("ac"), sigma.word("ba"),  sigma.word("ca")};
}

}  // namespace

Word bell_target_word(int r, int s, int t, int q) {
  Alphabet sigma = bell_alphabet();
  Word w = sigma.word("aa");
  append(w, sigma.word("ab"), r);
  append(w, sigma.word("ac"), s);
  append(w, sigma.word("aa"));
  append(w, sigma.word("ba"), t);
  append(w, sigma.word("ca"), q);
  append(w, sigma.word("aaa"));
  return w;
}

Factorization bell_factorization_shape_one(int r, int s, int t, int q) {
  Alphabet sigma = bell_alphabet();
  Factorization f;
  f.factors.push_back(sigma.word("aa"));
  for (int i = 0; i < r; ++i) f.factors.push_back(sigma.word("ab"));
  for (int i = 0; i < s; ++i) f.factors.push_back(sigma.word("ac"));
  f.factors.push_back(sigma.word("aa"));
  for (int i = 0; i < t; ++i) f.factors.push_back(sigma.word("ba"));
  for (int i = 0; i < q; ++i) f.factors.push_back(sigma.word("ca"));
  f.factors.push_back(sigma.word("aaa"));
  return f;
}

Factorization bell_factorization_shape_two(int r, int s, int t, int q) {
  Alphabet sigma = bell_alphabet();
  Factorization f;
  f.factors.push_back(sigma.word("aaa"));
  for (int i = 0; i < r; ++i) f.factors.push_back(sigma.word("ba"));
  for (int i = 0; i < s; ++i) f.factors.push_back(sigma.word("ca"));
  for (int i = 0; i < t; ++i) f.factors.push_back(sigma.word("ab"));
  for (int i = 0; i < q; ++i) f.factors.push_back(sigma.word("ac"));
  f.factors.push_back(sigma.word("aa"));
  f.factors.push_back(sigma.word("aa"));
  return f;
}

FamilyInstance bell_language() {
  FamilyInstance fam;
  fam.name = "bell";
  fam.language.kind = LanguageSpec::Kind::Finite;
  fam.language.alphabet = bell_alphabet();
  fam.language.words = bell_words();

  fam.claims.push_back({"6 words over {a,b,c}, ε ∉ L",
                        [spec = fam.language](std::string& detail) {
                          detail = std::to_string(spec.words.size()) + " words";
                          return spec.words.size() == 6 &&
                                 std::none_of(spec.words.begin(), spec.words.end(),
                                              [](const Word& w) { return w.empty(); });
                        }});
  fam.claims.push_back({"ufp(L) ∩ R keeps exactly the r=t, s=q exponents (r,s,t,q ≤ 2)",
                        [](std::string& detail) {
                          CheckReport report = bell_intersection_check(2);
                          detail = report.passed ? "all exponent combinations agree"
                                                 : report.lines.empty() ? "failed" : report.lines.back();
                          return report.passed;
                        }});
  return fam;
}

FamilyInstance ufs_regular_language() {
  FamilyInstance fam;
  fam.name = "ufs-regular";
  fam.language.kind = LanguageSpec::Kind::Regex;
  fam.language.alphabet = bell_alphabet();
  fam.language.pattern = "(ab)+(ac)+aa|(ba)+(ca)+|aa|aaa";

  fam.claims.push_back({"ε ∉ L",
                        [spec = fam.language](std::string& detail) {
                          bool has = spec_contains_epsilon(spec);
                          detail = has ? "ε ∈ L" : "ε ∉ L";
                          return !has;
                        }});
  fam.claims.push_back({"ufs(L) ∩ R keeps exactly the r=t, s=q exponents (r,s,t,q ≤ 2)",
                        [](std::string& detail) {
                          CheckReport report = ufs_regular_witness_check(2);
                          detail = report.passed ? "all exponent combinations agree"
                                                 : report.lines.empty() ? "failed" : report.lines.back();
                          return report.passed;
                        }});
  return fam;
}

Word binary_recode_word(const Word& w) {
  Alphabet target({"a", "b"});
  Symbol a = target.require("a");
  Symbol b = target.require("b");
  Word out;
  for (Symbol s : w) {
    out.push_back(b);
    append(out, Word(static_cast<std::size_t>(s) + 1, a));
    out.push_back(b);
  }
  return out;
}

LanguageSpec binary_recode(const LanguageSpec& finite_spec) {
  if (!finite_spec.finite())
    throw Error(ErrorKind::Parse, "binary recoding is defined for finite languages");
  LanguageSpec out;
  out.kind = LanguageSpec::Kind::Finite;
  out.alphabet = Alphabet({"a", "b"});
  for (const Word& w : finite_spec.words) out.words.push_back(binary_recode_word(w));
  return out;
}

std::vector<std::string> family_names() {
  return {"prop3", "prop5", "prop5-recoded", "thm8", "thm9", "bell", "ufs-regular"};
}

bool family_is_parametric(const std::string& name) {
  return name == "prop3" || name == "prop5" || name == "prop5-recoded";
}

FamilyInstance make_family(const std::string& name, int n) {
  if (name == "prop3") return prop3_family(n);
  if (name == "prop5") return prop5_family(n);
  if (name == "prop5-recoded") return prop5_recoded(n);
  if (name == "thm8") return thm8_language();
  if (name == "thm9") return thm9_language();
  if (name == "bell") return bell_language();
  if (name == "ufs-regular") return ufs_regular_language();
  throw Error(ErrorKind::Parse, "unknown family '" + name + "'");
}

}  // namespace ufact
