#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace beloch {

enum class ErrorCode {
  DegenerateInput,
  ZeroPolynomial,
  NotAFoldLine,
  OracleDisagreement,
  NoConvergence,
  NotANode,
  RefinementLimit,
  TangentialCrossing,
  SignObstruction,
  ZeroCoefficient,
  EmptyScene,
  BadRange,
  InvalidArgument,
};

/// Verbatim error name as used in reports and CLI diagnostics.
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace beloch
