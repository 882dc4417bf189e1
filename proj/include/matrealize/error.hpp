#pragma once

#include <stdexcept>
#include <string>

namespace matrealize {

enum class ErrorKind {
  EmptyBasisFamily,
  WrongCardinality,
  ExchangeViolation,
  OutOfRange,
  NotAPermutation,
  NotABasis,
  CaseOutOfSupportedRange,
  ParseError,
  ValidationError,
  ChecksumMismatch,
  AllZero,
  ZeroLinePresent,
  RankDeficient,
  NotAQuadric,
  ZeroPolynomial,
  ExponentOverflow,
  ContradictionDetected,
  IoError,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace matrealize
