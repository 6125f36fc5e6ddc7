#pragma once
#include <stdexcept>
#include <string>

namespace ellsw {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid family parameters or flags.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed or degenerate user-supplied data (documents, vectors).
class InputError : public Error {
 public:
  using Error::Error;
};

// Arithmetic outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

// A cyclotomic value that was required to be rational was not.
class NotRational : public Error {
 public:
  NotRational(const std::string& value)
      : Error("value is not rational: " + value), value_(value) {}
  const std::string& value() const { return value_; }

 private:
  std::string value_;
};

// Inconsistent generator assignments for a character.
class CharacterError : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant that must hold did not; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ellsw
