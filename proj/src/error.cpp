#include "circle_action/error.hpp"

namespace circle_action {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotEffective: return "NotEffective";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyAction: return "EmptyAction";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::DistinguishedStratum: return "DistinguishedStratum";
    case ErrorCode::UnknownStratum: return "UnknownStratum";
    case ErrorCode::NoDistinguishedStratum: return "NoDistinguishedStratum";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::MalformedDiagram: return "MalformedDiagram";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace circle_action
