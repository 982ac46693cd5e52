#pragma once

#include <stdexcept>
#include <string>

namespace qchar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A 64-bit coefficient computation left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these means either a
/// bug or a counterexample to one of the identities the library relies on.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qchar
