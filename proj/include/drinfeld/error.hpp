#pragma once

#include <stdexcept>
#include <string>

namespace drinfeld {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  DomainMismatch,
  SingularCurve,
  SplitInfinity,
  UnsupportedCharacteristic,
  UnsupportedModel,
  PrecisionTooLow,
  ZeroElement,
  ZeroIdeal,
  ZeroModulus,
  BoundTooSmall,
  BasisTooShort,
  PrecisionUnreachable,
  DenominatorVanishes,
  PrecisionLoss,
  InconsistentSeries,
  InsufficientCoefficients,
  RemainderNotZero,
  NonIntegralCoefficient,
  UnsupportedInfinitePlace,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures caused by malformed input rather than numerics.
  bool is_input_error() const noexcept {
    switch (code_) {
      case ErrorCode::SingularCurve:
      case ErrorCode::SplitInfinity:
      case ErrorCode::UnsupportedCharacteristic:
      case ErrorCode::UnsupportedModel:
      case ErrorCode::ParseError:
      case ErrorCode::ZeroIdeal:
      case ErrorCode::ZeroModulus:
      case ErrorCode::FieldMismatch:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace drinfeld
