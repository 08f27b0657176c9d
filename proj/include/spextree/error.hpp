#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spextree {

enum class ErrorCode {
  ParseError,
  NotATree,
  BadLabel,
  InvalidSubset,
  NotConnected,
  VertexAbsent,
  EmptyWitness,
  NotSubsetOfJprime,
  InvalidWitness,
  PreconditionFailed,
  InvalidCertificate,
  InternalVerificationFailed,
  InfeasibleFamily,
  SpecInvalid,
  HypothesisMissing,
  DeltaMismatch,
  DeltaIsOne,
  UnsupportedParameters,
  NoEmbeddableMember,
  DomainError,
  DeltaTooSmall,
  InvalidInputs,
  OutOfRange,
  TooLarge,
  ConfigError,
};

auto to_string(ErrorCode code) -> std::string_view;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  auto code() const noexcept -> ErrorCode { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace spextree
