#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qhgerm {

enum class ErrorCode {
  DivisionByZero,
  ZeroPolynomial,
  InvalidArgument,
  Parse,
  NegativeExponent,
  EmptyInput,
  NotQuasihomogeneous,
  WeightMismatch,
  InternalInconsistency,
  FormulaMismatch,
  BranchOutOfRange,
  NotEquivalentVerdict,
  NonConvergence,
  AmbiguousClustering,
  DegenerateConfiguration,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotQuasihomogeneous: return "NotQuasihomogeneous";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::BranchOutOfRange: return "BranchOutOfRange";
    case ErrorCode::NotEquivalentVerdict: return "NotEquivalentVerdict";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::AmbiguousClustering: return "AmbiguousClustering";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Grammar violation in polynomial text. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& message)
      : Error(code, "at position " + std::to_string(position) + ": " + message),
        position_(position),
        detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

}  // namespace qhgerm
