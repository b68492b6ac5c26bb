#pragma once

#include <stdexcept>
#include <string>

namespace ramify {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different groups (or coefficient fields).
class DescriptorMismatch : public Error {
public:
  using Error::Error;
};

/// An argument violates a documented precondition.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// The library cannot decide the answer from the data it was given
/// (for example an Artin-Schreier reduction that did not terminate).
class Undetermined : public Error {
public:
  using Error::Error;
};

/// A checked theorem-level invariant failed. Always a bug.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

/// Malformed textual literal.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::string token)
      : Error(what + " near '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

private:
  std::string token_;
};

} // namespace ramify
