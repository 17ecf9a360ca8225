#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conlat {

enum class ErrorCode {
  // input / structural
  DuplicateLabel,
  DuplicateOperation,
  ArityMismatch,
  TableEntryOutOfRange,
  NonTotalTable,
  EmptyCarrier,
  CarrierTooLarge,
  SignatureMismatch,
  NotAHomomorphism,
  NotACongruence,
  NotALattice,
  NotDistributive,
  SyntaxError,
  MissingMapping,
  UnknownAlgebra,
  IoError,
  // analysis
  ReticulationUnavailable,
  NotApplicable,
  HomeoFailure,
  AnomalyDetected,
};

std::string_view to_string(ErrorCode code);

/// True for codes that signal an internal theorem violation rather than bad input.
bool is_anomaly(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax errors carry a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(ErrorCode::SyntaxError, std::to_string(line) + ":" +
                                          std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace conlat
