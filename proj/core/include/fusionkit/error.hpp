#pragma once

#include <stdexcept>
#include <string>

namespace fusionkit {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (group order, subgroup count, search budget)
/// would be exceeded.  Caps fail loudly instead of truncating.
class CapError : public Error {
 public:
  using Error::Error;
};

/// Malformed group file, catalog spec or command-line input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its post-construction verification scan.
class VerificationError : public Error {
 public:
  VerificationError(std::string axiom, std::string witness)
      : Error(axiom + ": " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  std::string const& axiom() const noexcept { return axiom_; }
  std::string const& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

}  // namespace fusionkit
