#pragma once

#include <stdexcept>
#include <string>

namespace imprim {

// Error taxonomy. `config` errors mean the inputs were invalid or degenerate
// (CLI exit code 2); `check` errors mean a verification found a witness of
// failure (CLI exit code 1).
enum class ErrorKind {
  BadParams,
  CapExceeded,
  DivisionByZero,
  DimensionMismatch,
  SeparationFailure,
  NonInvertible,
  InconsistentData,
  RelationFailure,
  IntertwinerFailure,
  CommutantMismatch,
  CensusMismatch,
  SpanMismatch,
  RankDeficient,
  DiagramFailure,
  DivisibilityFailure,
  CharacterMismatch,
  NotAMonomialShift,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  // Config/degeneracy errors are distinguished from failed mathematical
  // checks so the CLI can honor its exit-code contract.
  bool is_config_error() const {
    switch (kind_) {
      case ErrorKind::BadParams:
      case ErrorKind::CapExceeded:
      case ErrorKind::DivisionByZero:
      case ErrorKind::DimensionMismatch:
      case ErrorKind::SeparationFailure:
      case ErrorKind::NonInvertible:
      case ErrorKind::InconsistentData:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace imprim
