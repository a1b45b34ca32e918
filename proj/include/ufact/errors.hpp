#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ufact {

enum class ErrorKind {
  Parse,              // malformed pattern / spec file / alphabet
  UnknownSymbol,      // token not in the declared alphabet
  AlphabetMismatch,   // binary operation over different alphabets
  EpsilonInLanguage,  // construction requires epsilon-free factor language
  NotInStar,          // predicate asked for a word outside L*
  CapExceeded,        // factorization enumeration hit its cap
  SliceOverflow,      // slice enumeration hit its cap
  StateExplosion,     // matrix / grammar construction hit its cap
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Pattern / input parse failure; position is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse, what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Enumeration stopped early; carries how many results were produced.
class CapExceededError : public Error {
 public:
  CapExceededError(std::uint64_t partial_count, const std::string& what)
      : Error(ErrorKind::CapExceeded, what), partial_(partial_count) {}

  std::uint64_t partial_count() const { return partial_; }

 private:
  std::uint64_t partial_;
};

}  // namespace ufact
