#pragma once

#include <string>

#include <json.hpp>
#include "beloch/cubic_fold.hpp"
#include "beloch/curve.hpp"
#include "beloch/general_cubic.hpp"

namespace beloch {

inline constexpr int kReportSchema = 1;

/// Discriminant, Hessian, shape, pass-through parameters, parabola
/// landings and, for a node, the winding around the anchor. errata_notes
/// lists the corrected statements the analysis relied on.
nlohmann::ordered_json analysis_report(const BelochParams& params);

nlohmann::ordered_json solve_report(const CubicEq& eq);
nlohmann::ordered_json winding_report(const BelochParams& params);
nlohmann::ordered_json surface_report(const BelochParams& params);
nlohmann::ordered_json general_report(const GeneralCubic& c);

/// Two-space indented JSON followed by a newline.
std::string dump_report(const nlohmann::ordered_json& j);

}  // namespace beloch
