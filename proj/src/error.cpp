#include "pointmod/error.hpp"

namespace pointmod {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::PoleAtPoint: return "PoleAtPoint";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotCommuting: return "NotCommuting";
        case ErrorCode::NotNilpotent: return "NotNilpotent";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::RankConditionViolated: return "RankConditionViolated";
        case ErrorCode::UnsupportedLength: return "UnsupportedLength";
        case ErrorCode::IrrationalParameter: return "IrrationalParameter";
        case ErrorCode::InconsistentDimensions: return "InconsistentDimensions";
        case ErrorCode::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    }
    return "Unknown";
}

}  // namespace pointmod
