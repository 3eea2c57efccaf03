#include "rootfam/error.hpp"

namespace rootfam {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::EvaluationError: return "EvaluationError";
    case ErrorCode::SingularDerivative: return "SingularDerivative";
    case ErrorCode::ZeroResidual: return "ZeroResidual";
    case ErrorCode::DegenerateStep: return "DegenerateStep";
    case ErrorCode::UndefinedParameter: return "UndefinedParameter";
    case ErrorCode::UndefinedCOC: return "UndefinedCOC";
    case ErrorCode::NotASimpleZero: return "NotASimpleZero";
    case ErrorCode::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

}  // namespace rootfam
