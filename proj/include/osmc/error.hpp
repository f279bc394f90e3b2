#pragma once

#include <stdexcept>
#include <string>

namespace osmc {

enum class ErrorCode {
  MalformedRotation,
  SelfLoop,
  ParallelEdge,
  Disconnected,
  EulerViolation,
  InvalidMarker,
  NotBiconnected,
  TerminalNotOnBoundary,
  DegeneratePair,
  DuplicatePair,
  BridgeDetected,
  UnsatisfiableDemand,
  NotAMulticut,
  ExtractionNotSeparating,
  BudgetExceeded,
  ParseError,
  BadParams,
  MissingArtifact,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedRotation: return "MalformedRotation";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::ParallelEdge: return "ParallelEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::InvalidMarker: return "InvalidMarker";
    case ErrorCode::NotBiconnected: return "NotBiconnected";
    case ErrorCode::TerminalNotOnBoundary: return "TerminalNotOnBoundary";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::DuplicatePair: return "DuplicatePair";
    case ErrorCode::BridgeDetected: return "BridgeDetected";
    case ErrorCode::UnsatisfiableDemand: return "UnsatisfiableDemand";
    case ErrorCode::NotAMulticut: return "NotAMulticut";
    case ErrorCode::ExtractionNotSeparating: return "ExtractionNotSeparating";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::MissingArtifact: return "MissingArtifact";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // CLI exit code: 2 for exhausted budgets, 3 for broken internal
  // invariants, 1 for anything wrong with the input.
  int exit_code() const noexcept {
    switch (code_) {
      case ErrorCode::BudgetExceeded: return 2;
      case ErrorCode::ExtractionNotSeparating: return 3;
      default: return 1;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace osmc
