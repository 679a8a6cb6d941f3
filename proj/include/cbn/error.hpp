#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankMismatch : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

// symbol outside the alphabet an operation accepts
struct AlphabetError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(std::string const& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct NotConjugating : Error {
  using Error::Error;
};

struct NotBijective : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct SpecializationError : Error {
  using Error::Error;
};

struct RewriteStuck : Error {
  using Error::Error;
};

// a built-in table failed its own consistency check
struct VerificationFailure : Error {
  using Error::Error;
};

}  // namespace cbn
