#include "ufact/language_spec.hpp"

#include <fstream>
#include <set>

#include "ufact/regex.hpp"

namespace ufact {

LanguageSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "spec must be a JSON object");
  if (!j.contains("alphabet") || !j["alphabet"].is_array())
    throw Error(ErrorKind::Parse, "spec needs an \"alphabet\" array");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorKind::Parse, "spec needs a \"kind\" of \"finite\" or \"regex\"");

  LanguageSpec spec;
  std::vector<std::string> tokens;
  for (const auto& t : j["alphabet"]) {
    if (!t.is_string()) throw Error(ErrorKind::Parse, "alphabet tokens must be strings");
    tokens.push_back(t.get<std::string>());
  }
  spec.alphabet = Alphabet(std::move(tokens));

  std::string kind = j["kind"].get<std::string>();
  if (kind == "finite") {
    spec.kind = LanguageSpec::Kind::Finite;
    if (!j.contains("words") || !j["words"].is_array())
      throw Error(ErrorKind::Parse, "finite spec needs a \"words\" array");
    std::set<Word> seen;
    for (const auto& jw : j["words"]) {
      if (!jw.is_array()) throw Error(ErrorKind::Parse, "words must be arrays of tokens");
      std::vector<std::string> parts;
      for (const auto& t : jw) {
        if (!t.is_string()) throw Error(ErrorKind::Parse, "word tokens must be strings");
        parts.push_back(t.get<std::string>());
      }
      Word w = spec.alphabet.word(parts);
      if (!seen.insert(w).second)
        throw Error(ErrorKind::Parse, "duplicate word '" + spec.alphabet.format(w) + "' in spec");
      spec.words.push_back(std::move(w));
    }
  } else if (kind == "regex") {
    spec.kind = LanguageSpec::Kind::Regex;
    if (!j.contains("pattern") || !j["pattern"].is_string())
      throw Error(ErrorKind::Parse, "regex spec needs a \"pattern\" string");
    spec.pattern = j["pattern"].get<std::string>();
    compile_regex(spec.pattern, spec.alphabet);  // validate eagerly
  } else {
    throw Error(ErrorKind::Parse, "unknown spec kind '" + kind + "'");
  }
  return spec;
}

nlohmann::json spec_to_json(const LanguageSpec& spec) {
  nlohmann::json j;
  j["alphabet"] = spec.alphabet.tokens();
  if (spec.finite()) {
    j["kind"] = "finite";
    nlohmann::json words = nlohmann::json::array();
    for (const Word& w : spec.words) {
      nlohmann::json jw = nlohmann::json::array();
      for (Symbol s : w) jw.push_back(spec.alphabet.token(s));
      words.push_back(std::move(jw));
    }
    j["words"] = std::move(words);
  } else {
    j["kind"] = "regex";
    j["pattern"] = spec.pattern;
  }
  return j;
}

LanguageSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open spec file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, "invalid JSON in '" + path + "': " + e.what());
  }
  return spec_from_json(j);
}

void save_spec(const LanguageSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write spec file '" + path + "'");
  out << spec_to_json(spec).dump(2) << "\n";
}

Dfa spec_dfa(const LanguageSpec& spec) {
  if (spec.finite()) return dfa_from_words(spec.alphabet, spec.words);
  return minimize(determinize(compile_regex(spec.pattern, spec.alphabet)));
}

bool spec_contains_epsilon(const LanguageSpec& spec) {
  if (spec.finite()) {
    for (const Word& w : spec.words)
      if (w.empty()) return true;
    return false;
  }
  return spec_dfa(spec).accepts(Word{});
}

FactorLanguage spec_factor_language(const LanguageSpec& spec) {
  if (spec.finite()) return factor_language(spec.alphabet, spec.words);
  return factor_language(spec_dfa(spec), "regex " + spec.pattern);
}

}  // namespace ufact
