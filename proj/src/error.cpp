#include "hodgekit/error.hpp"

namespace hodgekit {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptySimplex: return "EmptySimplex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::ZeroDimensional: return "ZeroDimensional";
    case ErrorCode::UnknownSimplex: return "UnknownSimplex";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAGraph: return "NotAGraph";
    case ErrorCode::MissingRestriction: return "MissingRestriction";
    case ErrorCode::NonCommutingRestrictions: return "NonCommutingRestrictions";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Validation: return "Validation";
    case ErrorCode::Numerical: return "Numerical";
    }
    return "Unknown";
}

} // namespace hodgekit
