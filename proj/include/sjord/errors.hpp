#pragma once

#include <stdexcept>
#include <string>

namespace sjord {

/// Base of every error thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A rational function in q whose reduced denominator vanishes at q = 1.
class PoleAtOne : public Error {
 public:
  explicit PoleAtOne(const std::string& where) : Error("pole at q = 1: " + where) {}
};

class NotNilpotent : public Error {
 public:
  NotNilpotent() : Error("argument is not nilpotent within dim steps") {}
};

class UndeclaredParity : public Error {
 public:
  UndeclaredParity() : Error("graded commutator needs operands with declared parity") {}
};

/// Exact division by a power of h left a remainder.
class DivisibilityFailure : public Error {
 public:
  explicit DivisibilityFailure(const std::string& what) : Error("not divisible by h: " + what) {}
};

class InvalidN : public Error {
 public:
  explicit InvalidN(int n) : Error("invalid N = " + std::to_string(n)) {}
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name) : Error("unknown generator " + name) {}
};

class NotSolvable : public Error {
 public:
  explicit NotSolvable(const std::string& name)
      : Error("coproduct of " + name + " is not in solvable triangular form") {}
};

}  // namespace sjord
