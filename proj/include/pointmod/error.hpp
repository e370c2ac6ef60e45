#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pointmod {

enum class ErrorCode {
    ZeroDenominator,
    DivisionByZero,
    PoleAtPoint,
    ParseError,
    InvalidArgument,
    ShapeMismatch,
    NotCommuting,
    NotNilpotent,
    FieldMismatch,
    RankConditionViolated,
    UnsupportedLength,
    IrrationalParameter,
    InconsistentDimensions,
    ResourceBudgetExceeded,
    CapExceeded,
    InvalidDiagram,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported through this type;
/// the code lets callers (the CLI in particular) dispatch without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace pointmod
