#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace evfusion {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad construction input: duplicate labels, width mismatch, bad weights.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two operands were built on different frames.
class FrameMismatch : public Error {
 public:
  using Error::Error;
};

/// A mass function violated a rule's precondition (not a valid closed-world bba).
class InvalidMass : public Error {
 public:
  using Error::Error;
};

/// Dempster's normalisation is undefined because k12 is (numerically) 1.
class TotalConflict : public Error {
 public:
  TotalConflict(const std::string& what, double conflict)
      : Error(what), conflict_(conflict) {}
  double conflict() const noexcept { return conflict_; }

 private:
  double conflict_;
};

/// A rule's formula has no defined value for these inputs.
class Degenerate : public Error {
 public:
  using Error::Error;
};

/// The supplied ACR weighting function breaks the endpoint or range conditions.
class InvalidBeta : public Error {
 public:
  using Error::Error;
};

class InfeasibleConfig : public Error {
 public:
  using Error::Error;
};

/// Text input could not be decoded. `where()` names the line/column or field.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string where)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace evfusion
