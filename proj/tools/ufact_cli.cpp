// Command-line front end: load a language spec, run the factorization
// analyses and their oracle cross-checks, export automata, or run the
// whole verification suite.
//
// Exit codes: 0 ok, 2 property violation (construction disagrees with the
// oracle or a claim fails), 3 input error, 4 ε ∈ L, 5 I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ufact/acceptance.hpp"
#include "ufact/automata.hpp"
#include "ufact/cfg.hpp"
#include "ufact/dot.hpp"
#include "ufact/families.hpp"
#include "ufact/language_spec.hpp"
#include "ufact/oracle.hpp"
#include "ufact/su_engine.hpp"
#include "ufact/uf_engine.hpp"
#include "ufact/ufp_engine.hpp"
#include "ufact/ufs_engine.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitInput = 3;
constexpr int kExitEpsilon = 4;
constexpr int kExitIo = 5;

int exit_code_for(const ufact::Error& e) {
  switch (e.kind()) {
    case ufact::ErrorKind::EpsilonInLanguage: return kExitEpsilon;
    case ufact::ErrorKind::Io: return kExitIo;
    default: return kExitInput;
  }
}

std::vector<std::string> word_tokens(const ufact::Alphabet& sigma, const ufact::Word& w) {
  std::vector<std::string> out;
  for (ufact::Symbol s : w) out.push_back(sigma.token(s));
  return out;
}

nlohmann::ordered_json words_json(const ufact::Alphabet& sigma, const std::vector<ufact::Word>& words) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const ufact::Word& w : words) out.push_back(sigma.format(w));
  return out;
}

struct AnalyzeOutcome {
  nlohmann::ordered_json report;
  bool violation = false;
};

AnalyzeOutcome analyze(const ufact::LanguageSpec& spec, ufact::FactorPredicate predicate,
                       std::size_t max_len, std::size_t cap) {
  using namespace ufact;
  auto t0 = std::chrono::steady_clock::now();

  if (spec_contains_epsilon(spec))
    throw Error(ErrorKind::EpsilonInLanguage,
                "ε ∈ L: every word of L* factors ambiguously, uf(L) = ∅ and the "
                "constructions are undefined");

  AnalyzeOutcome out;
  nlohmann::ordered_json& report = out.report;
  report["language"] = spec.finite() ? "finite, " + std::to_string(spec.words.size()) + " words"
                                     : "regex " + spec.pattern;
  report["alphabet"] = spec.alphabet.tokens();
  report["predicate"] = predicate_name(predicate);
  report["max_len"] = max_len;

  FactorLanguage L = spec_factor_language(spec);
  Dfa m = spec_dfa(spec);
  report["minimal_dfa_states"] = m.state_count();

  std::vector<Word> oracle_words = slice_by_predicate(L, predicate, max_len, cap);
  report["oracle_slice"] = words_json(spec.alphabet, oracle_words);

  auto check_agreement = [&](const std::vector<Word>& construction_words, const std::string& label) {
    bool agree = std::set<Word>(construction_words.begin(), construction_words.end()) ==
                 std::set<Word>(oracle_words.begin(), oracle_words.end());
    report[label + "_agrees_with_oracle"] = agree;
    if (!agree) out.violation = true;
  };

  switch (predicate) {
    case FactorPredicate::Uf: {
      CodeCheck code = is_code(m);
      report["is_code"] = code.code;
      if (!code.code) {
        // Re-validate the witness against the oracle before reporting it.
        if (count_factorizations(*code.witness, L.membership, 2) < 2) {
          report["witness_error"] = "witness failed oracle re-validation";
          out.violation = true;
        } else {
          report["shortest_ambiguous_word"] = spec.alphabet.format(*code.witness);
          report["shortest_ambiguous_length"] = code.witness->size();
          std::size_t n = static_cast<std::size_t>(m.state_count());
          report["corollary_bound_n2_plus_n"] = n * n + n;
        }
      }
      check_agreement(enumerate_slice(uf_dfa(m), max_len, cap), "uf_dfa");
      break;
    }
    case FactorPredicate::Su: {
      report["su_gap_exists"] = su_gap_exists(m);
      OneCounterPda machine = build_su_counter_machine(m);
      std::vector<Word> machine_words;
      for (const Word& x : star_slice(L, max_len, cap))
        if (!accepts_bounded(machine, x, x.size() + 1)) machine_words.push_back(x);
      check_agreement(machine_words, "counter_machine");
      break;
    }
    case FactorPredicate::Ufp: {
      if (!spec.finite())
        throw Error(ErrorKind::Parse, "the ufp counter machine requires a finite language");
      OneCounterPda machine = build_ufp_counter_machine(spec.alphabet, spec.words);
      std::vector<Word> machine_words;
      for (const Word& x : star_slice(L, max_len, cap))
        if (!accepts_bounded(machine, x, x.size() + 1)) machine_words.push_back(x);
      check_agreement(machine_words, "counter_machine");
      break;
    }
    case FactorPredicate::Ufs: {
      if (spec.finite()) {
        check_agreement(enumerate_slice(ufs_dfa(spec.alphabet, spec.words), max_len, cap),
                        "ufs_dfa");
        auto violation = shortest_ufs_violation(spec.alphabet, spec.words);
        if (violation) {
          report["shortest_ufs_violation"] = spec.alphabet.format(violation->word);
          report["violation_length"] = violation->word.size();
          report["bound_2m2n2"] = violation->bound;
        } else {
          report["shortest_ufs_violation"] = nullptr;
        }
      } else {
        report["note"] = "6-tuple construction is defined for finite languages; oracle only";
      }
      break;
    }
  }

  auto t1 = std::chrono::steady_clock::now();
  report["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return out;
}

void print_human_report(const nlohmann::ordered_json& report) {
  for (const auto& [key, value] : report.items()) {
    if (key == "oracle_slice") {
      std::cout << "  " << key << " (" << value.size() << " words):";
      for (const auto& w : value) std::cout << " " << w.get<std::string>();
      std::cout << "\n";
    } else {
      std::cout << "  " << key << ": " << value.dump() << "\n";
    }
  }
}

int run_family(const std::string& name, int lo, int hi, bool as_json) {
  using namespace ufact;
  std::vector<FamilyInstance> instances;
  if (family_is_parametric(name)) {
    for (int n = lo; n <= hi; ++n) instances.push_back(make_family(name, n));
  } else {
    instances.push_back(make_family(name, 0));
  }

  bool all_ok = true;
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const FamilyInstance& fam : instances) {
    nlohmann::ordered_json jf;
    jf["name"] = fam.name;
    nlohmann::ordered_json claims = nlohmann::ordered_json::array();
    if (!as_json) std::cout << fam.name << "\n";
    for (const FamilyClaim& claim : fam.claims) {
      std::string detail;
      bool ok = claim.check(detail);
      all_ok = all_ok && ok;
      if (as_json) {
        claims.push_back({{"claim", claim.description}, {"passed", ok}, {"detail", detail}});
      } else {
        std::cout << "  [" << (ok ? "PASS" : "FAIL") << "] " << claim.description
                  << (detail.empty() ? "" : " — " + detail) << "\n";
      }
    }
    jf["claims"] = std::move(claims);
    out.push_back(std::move(jf));
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitViolation;
}

int run_export_dot(const std::string& spec_path, const std::string& construction,
                   const std::string& out_path) {
  using namespace ufact;
  LanguageSpec spec = load_spec(spec_path);
  std::string dot;
  if (construction == "language") {
    dot = to_dot(spec_dfa(spec), "language");
  } else if (construction == "star") {
    dot = to_dot(star_nfa(spec_dfa(spec)), "star");
  } else if (construction == "double") {
    dot = to_dot(build_double_nfa(spec_dfa(spec)), "double");
  } else if (construction == "uf") {
    dot = to_dot(uf_dfa(spec_dfa(spec)), "uf");
  } else if (construction == "matrix-uf") {
    dot = to_dot(matrix_uf_dfa(spec_dfa(spec)), "matrix_uf");
  } else if (construction == "ufs") {
    if (!spec.finite())
      throw Error(ErrorKind::Parse, "the ufs construction requires a finite language");
    dot = to_dot(build_ufs_nfa(spec.alphabet, spec.words), "ufs");
  } else {
    throw Error(ErrorKind::Parse, "unknown construction '" + construction +
                                      "' (language, star, double, uf, matrix-uf, ufs)");
  }
  std::ofstream out(out_path);
  if (!out || !(out << dot) || !out.flush())
    throw Error(ErrorKind::Io, "cannot write '" + out_path + "'");
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

int run_accept() {
  auto results = ufact::run_acceptance_suite();
  bool all_ok = true;
  for (const auto& r : results) {
    all_ok = all_ok && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name
              << (r.detail.empty() ? "" : " — " + r.detail) << "\n";
  }
  std::cout << (all_ok ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all_ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization analysis over regular and finite languages"};
  app.require_subcommand(1);

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Run a predicate analysis with oracle cross-check");
  std::string spec_path, predicate_name_arg = "uf";
  std::size_t max_len = 8;
  std::size_t cap = ufact::kDefaultSliceCap;
  bool as_json = false;
  analyze_cmd->add_option("spec", spec_path, "LanguageSpec JSON file")->required();
  analyze_cmd->add_option("--predicate", predicate_name_arg, "uf, su, ufp or ufs");
  analyze_cmd->add_option("--max-len", max_len, "slice length bound");
  analyze_cmd->add_option("--cap", cap, "enumeration cap");
  analyze_cmd->add_flag("--json", as_json, "JSON output");

  // family
  auto* family_cmd = app.add_subcommand("family", "Check the claims of a generated language family");
  std::string family_name, n_range = "2..4";
  bool family_json = false;
  family_cmd->add_option("name", family_name, "prop3, prop5, prop5-recoded, thm8, thm9, bell, ufs-regular")
      ->required();
  family_cmd->add_option("--n", n_range, "parameter or range, e.g. 3 or 2..5");
  family_cmd->add_flag("--json", family_json, "JSON output");

  // export-dot
  auto* dot_cmd = app.add_subcommand("export-dot", "Write a construction as a Graphviz file");
  std::string dot_spec, dot_construction = "language", dot_out;
  dot_cmd->add_option("spec", dot_spec, "LanguageSpec JSON file")->required();
  dot_cmd->add_option("--construction", dot_construction, "language, star, double, uf, matrix-uf, ufs");
  dot_cmd->add_option("--out", dot_out, "output path")->required();

  // accept
  app.add_subcommand("accept", "Run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze_cmd->parsed()) {
      auto predicate = ufact::predicate_from_name(predicate_name_arg);
      if (!predicate)
        throw ufact::Error(ufact::ErrorKind::Parse, "unknown predicate '" + predicate_name_arg + "'");
      ufact::LanguageSpec spec = ufact::load_spec(spec_path);
      AnalyzeOutcome outcome = analyze(spec, *predicate, max_len, cap);
      if (as_json) {
        std::cout << outcome.report.dump(2) << "\n";
      } else {
        std::cout << "analysis of " << spec_path << "\n";
        print_human_report(outcome.report);
        std::cout << (outcome.violation ? "CONSTRUCTION-ORACLE MISMATCH" : "construction agrees with oracle")
                  << "\n";
      }
      return outcome.violation ? kExitViolation : kExitOk;
    }
    if (family_cmd->parsed()) {
      int lo = 2, hi = 4;
      auto dots = n_range.find("..");
      try {
        if (dots == std::string::npos) {
          lo = hi = std::stoi(n_range);
        } else {
          lo = std::stoi(n_range.substr(0, dots));
          hi = std::stoi(n_range.substr(dots + 2));
        }
      } catch (const std::exception&) {
        throw ufact::Error(ufact::ErrorKind::Parse, "bad range '" + n_range + "'");
      }
      return run_family(family_name, lo, hi, family_json);
    }
    if (dot_cmd->parsed()) return run_export_dot(dot_spec, dot_construction, dot_out);
    return run_accept();
  } catch (const ufact::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
