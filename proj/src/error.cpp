#include "spextree/error.hpp"

namespace spextree {

auto to_string(ErrorCode code) -> std::string_view {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::VertexAbsent: return "VertexAbsent";
    case ErrorCode::EmptyWitness: return "EmptyWitness";
    case ErrorCode::NotSubsetOfJprime: return "NotSubsetOfJprime";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::InternalVerificationFailed: return "InternalVerificationFailed";
    case ErrorCode::InfeasibleFamily: return "InfeasibleFamily";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::HypothesisMissing: return "HypothesisMissing";
    case ErrorCode::DeltaMismatch: return "DeltaMismatch";
    case ErrorCode::DeltaIsOne: return "DeltaIsOne";
    case ErrorCode::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorCode::NoEmbeddableMember: return "NoEmbeddableMember";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DeltaTooSmall: return "DeltaTooSmall";
    case ErrorCode::InvalidInputs: return "InvalidInputs";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace spextree
