#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chebo {

enum class ErrorCode {
  InvalidTable,
  NonAssociative,
  NoIdentity,
  NoInverse,
  ModulusTooSmall,
  GroupTooLarge,
  NotAnosov,
  Overflow,
  ModelMismatch,
  EmptyStream,
  SOutOfRange,
  MismatchedClasses,
  NoncommutingPeripheral,
  NotASubgroup,
  NotNormal,
  NotPrime,
  IndexOutOfRange,
  InvalidArgument,
  ConfigInvalid,
  IoError,
  DatasetEmpty,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTable: return "INVALID_TABLE";
    case ErrorCode::NonAssociative: return "NON_ASSOCIATIVE";
    case ErrorCode::NoIdentity: return "NO_IDENTITY";
    case ErrorCode::NoInverse: return "NO_INVERSE";
    case ErrorCode::ModulusTooSmall: return "MODULUS_TOO_SMALL";
    case ErrorCode::GroupTooLarge: return "GROUP_TOO_LARGE";
    case ErrorCode::NotAnosov: return "NOT_ANOSOV";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::ModelMismatch: return "MODEL_MISMATCH";
    case ErrorCode::EmptyStream: return "EMPTY_STREAM";
    case ErrorCode::SOutOfRange: return "S_OUT_OF_RANGE";
    case ErrorCode::MismatchedClasses: return "MISMATCHED_CLASSES";
    case ErrorCode::NoncommutingPeripheral: return "NONCOMMUTING_PERIPHERAL";
    case ErrorCode::NotASubgroup: return "NOT_A_SUBGROUP";
    case ErrorCode::NotNormal: return "NOT_NORMAL";
    case ErrorCode::NotPrime: return "NOT_PRIME";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::ConfigInvalid: return "CONFIG_INVALID";
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::DatasetEmpty: return "DATASET_EMPTY";
  }
  return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chebo
