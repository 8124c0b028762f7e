#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hodgekit {

enum class ErrorCode {
    EmptySimplex,
    DuplicateVertex,
    EmptyComplex,
    ZeroDimensional,
    UnknownSimplex,
    DimensionOutOfRange,
    ShapeMismatch,
    FieldMismatch,
    NotSymmetric,
    NotAGraph,
    MissingRestriction,
    NonCommutingRestrictions,
    BadParams,
    Validation,
    Numerical,
};

std::string_view to_string(ErrorCode code);

/// Library error carrying a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hodgekit
