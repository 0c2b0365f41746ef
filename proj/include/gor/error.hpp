#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gor {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: parameters, syntax, unknown names, ring mismatches.
class UserError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public UserError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : UserError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& name, std::size_t position)
      : ParseError("unknown variable '" + name + "'", position) {}
};

class RingMismatch : public UserError {
 public:
  RingMismatch() : UserError("polynomials belong to different rings") {}
};

class BadParameter : public UserError {
 public:
  using UserError::UserError;
};

class NotArtinian : public UserError {
 public:
  using UserError::UserError;
};

class NotLevel : public UserError {
 public:
  using UserError::UserError;
};

/// An instance is above a configured feasibility threshold.
class InfeasibleSize : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed; results cannot be trusted.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace gor
