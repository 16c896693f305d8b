#include "beloch/error.hpp"

namespace beloch {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotAFoldLine: return "NotAFoldLine";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotANode: return "NotANode";
    case ErrorCode::RefinementLimit: return "RefinementLimit";
    case ErrorCode::TangentialCrossing: return "TangentialCrossing";
    case ErrorCode::SignObstruction: return "SignObstruction";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::EmptyScene: return "EmptyScene";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace beloch
