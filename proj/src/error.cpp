#include "matrealize/error.hpp"

namespace matrealize {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyBasisFamily: return "EmptyBasisFamily";
    case ErrorKind::WrongCardinality: return "WrongCardinality";
    case ErrorKind::ExchangeViolation: return "ExchangeViolation";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::CaseOutOfSupportedRange: return "CaseOutOfSupportedRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::ZeroLinePresent: return "ZeroLinePresent";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotAQuadric: return "NotAQuadric";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::ContradictionDetected: return "ContradictionDetected";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace matrealize
