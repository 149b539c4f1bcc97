#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ringzeta {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a declared shape or axiom (bad indices, lengths, flags).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Unknown catalog name or identifier.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Predicted work exceeds the configured ceiling. Carries the prediction.
class ResourceGuard : public Error {
 public:
  ResourceGuard(const std::string& what, mpz_class predicted, mpz_class ceiling)
      : Error(what + " (predicted " + predicted.get_str() + ", ceiling " + ceiling.get_str() + ")"),
        predicted_(std::move(predicted)),
        ceiling_(std::move(ceiling)) {}
  const mpz_class& predicted() const { return predicted_; }
  const mpz_class& ceiling() const { return ceiling_; }

 private:
  mpz_class predicted_;
  mpz_class ceiling_;
};

/// A computed quantity contradicts a mathematical invariant of the pipeline.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but outside what the operation supports.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Dirichlet coefficient requested outside the range covered by the local factors.
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// Rational function whose denominator vanishes at Y = 0.
class NonExpandable : public Error {
 public:
  using Error::Error;
};

/// Monomial substitution sends a denominator factor (1 - X^r) to zero.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A level-by-level computation kept producing contributions past its stopping margin.
class StabilizationError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an operation's precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace ringzeta
