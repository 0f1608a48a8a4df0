#include "sqmat/error.hpp"

namespace sqmat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NullDivisor: return "NullDivisor";
    case ErrorKind::MixedCharacter: return "MixedCharacter";
    case ErrorKind::RealInput: return "RealInput";
    case ErrorKind::ZeroNorm: return "ZeroNorm";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::FormulaInapplicable: return "FormulaInapplicable";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::ProblemTooLarge: return "ProblemTooLarge";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotStructured: return "NotStructured";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::EmptyNullSpace: return "EmptyNullSpace";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NonComplexLambda: return "NonComplexLambda";
    case ErrorKind::InternalResidualFailure: return "InternalResidualFailure";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace sqmat
