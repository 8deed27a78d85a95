#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccfusion {

enum class ErrorKind {
  DimensionMismatch,
  ZeroSubspace,
  InvalidInput,
  NotHermitian,
  NotPSD,
  NotInvertible,
  SqrtGateFailed,
  NotAFrame,
  SingularOperator,
  HypothesisViolated,
  NotCSquared,
  NotSurjective,
  InvalidQDual,
  InvalidParams,
  ParseError,
  MissingInput,
  InvalidRange,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define CCFUSION_SIMPLE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(ErrorKind::Name, what) {} \
  };

CCFUSION_SIMPLE_ERROR(DimensionMismatch)
CCFUSION_SIMPLE_ERROR(ZeroSubspace)
CCFUSION_SIMPLE_ERROR(InvalidInput)
CCFUSION_SIMPLE_ERROR(NotInvertible)
CCFUSION_SIMPLE_ERROR(NotAFrame)
CCFUSION_SIMPLE_ERROR(SingularOperator)
CCFUSION_SIMPLE_ERROR(HypothesisViolated)
CCFUSION_SIMPLE_ERROR(NotCSquared)
CCFUSION_SIMPLE_ERROR(NotSurjective)
CCFUSION_SIMPLE_ERROR(InvalidQDual)
CCFUSION_SIMPLE_ERROR(InvalidParams)
CCFUSION_SIMPLE_ERROR(ParseError)
CCFUSION_SIMPLE_ERROR(MissingInput)
CCFUSION_SIMPLE_ERROR(InvalidRange)

#undef CCFUSION_SIMPLE_ERROR

/// Carries the measured relative residual ||A - A*|| / max(1, ||A||).
class NotHermitian : public Error {
 public:
  NotHermitian(const std::string& what, double residual)
      : Error(ErrorKind::NotHermitian, what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Carries the offending (most negative) eigenvalue.
class NotPSD : public Error {
 public:
  NotPSD(const std::string& what, double eigenvalue)
      : Error(ErrorKind::NotPSD, what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// The local operator C* pi_i C' at `index` (zero-based) has no principal
/// square root. `cause` is NotHermitian or NotPSD; `residual` is the
/// Hermitian residual or the offending eigenvalue respectively.
class SqrtGateFailed : public Error {
 public:
  SqrtGateFailed(const std::string& what, std::size_t index, ErrorKind cause,
                 double residual)
      : Error(ErrorKind::SqrtGateFailed, what),
        index_(index),
        cause_(cause),
        residual_(residual) {}
  std::size_t index() const noexcept { return index_; }
  ErrorKind cause() const noexcept { return cause_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t index_;
  ErrorKind cause_;
  double residual_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroSubspace: return "ZeroSubspace";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::SqrtGateFailed: return "SqrtGateFailed";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::SingularOperator: return "SingularOperator";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotCSquared: return "NotCSquared";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::InvalidQDual: return "InvalidQDual";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MissingInput: return "MissingInput";
    case ErrorKind::InvalidRange: return "InvalidRange";
  }
  return "Unknown";
}

}  // namespace ccfusion
