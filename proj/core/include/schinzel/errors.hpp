#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace schinzel {

/// Base class for every failure this library reports deliberately.
class Error : public std::runtime_error {
public:
  explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// A documented precondition does not hold for the given inputs.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The inputs share a nonconstant factor over the fraction field.
class CommonFactorError : public PreconditionError {
public:
  explicit CommonFactorError(std::string gcd_text)
      : PreconditionError("inputs share a common factor: " + gcd_text),
        gcd_text_(std::move(gcd_text)) {}
  const std::string& gcd_text() const { return gcd_text_; }

private:
  std::string gcd_text_;
};

/// Two congruences conflict on a shared prime power.
class IncompatibleCongruences : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// An Assumption-on-Values check failed; carries the offending prime.
class AvViolation : public PreconditionError {
public:
  AvViolation(std::string which, std::string failing_prime)
      : PreconditionError(which + " fails at prime " + failing_prime),
        failing_prime_(std::move(failing_prime)) {}
  const std::string& failing_prime() const { return failing_prime_; }

private:
  std::string failing_prime_;
};

/// A value is used with a ring it does not belong to.
class RingMismatchError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// An effort bound ran out before the computation finished.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A configured enumeration cap (residue count, matrix size, ...) was hit.
class CapExceeded : public BudgetExceeded {
public:
  using BudgetExceeded::BudgetExceeded;
};

/// Expression text rejected by the polynomial parser; carries the offset.
class ParseError : public Error {
public:
  ParseError(std::string msg, std::size_t position)
      : Error(msg + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace schinzel
