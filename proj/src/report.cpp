#include "beloch/report.hpp"

#include <cmath>

#include "beloch/error.hpp"
#include "beloch/parabola.hpp"
#include "beloch/surface.hpp"
#include "beloch/winding.hpp"

namespace beloch {

using nlohmann::ordered_json;

namespace {

ordered_json point_json(const Point& p) { return ordered_json::array({p.x, p.y}); }

ordered_json params_json(const BelochParams& pr) {
  return {{"p", pr.p}, {"q", pr.q}, {"alpha", pr.alpha}};
}

ordered_json header(const char* command) { return {{"schema", kReportSchema}, {"command", command}}; }

constexpr const char* kIntervalNote =
    "A' lies inside the circle about P through A exactly for r strictly between the roots "
    "(q - sqrt(q^2 + 4p))/2 and (q + sqrt(q^2 + 4p))/2 of r^2 - q r - p; the unhalved endpoints "
    "q -/+ sqrt(q^2 + 4p) are too wide";
constexpr const char* kTwiceNote =
    "the orbit passes through P exactly twice when 4p + q^2 > 0 (the case 4p + q^2 = 0 passes once)";
constexpr const char* kAnchorNote =
    "A = P would need (p, q) = (-1, 0), where 4p + q^2 = -4 < 0, so it cannot occur for a self-intersecting curve";

ordered_json winding_block(const BelochParams& pr) {
  const auto [lo, hi] = loop_range(pr);
  const ClosedLoop loop = beloch_loop(pr);
  ordered_json w = {{"loop_range", {lo, hi}}, {"curve_through_anchor", curve_through_anchor(pr)}};
  try {
    const WindingResult res = winding_number(loop, pr.anchor());
    w["value"] = res.value ? ordered_json(*res.value) : ordered_json(nullptr);
    w["min_distance_to_anchor"] = res.min_distance_to_center;
    if (res.value) {
      const RayCrossings rays = axis_ray_crossings(loop, pr.anchor());
      w["rays"] = {{"east", rays.east},
                   {"north", rays.north},
                   {"west", rays.west},
                   {"south", rays.south},
                   {"tangential", rays.tangential}};
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RefinementLimit) throw;
    w["value"] = nullptr;
    w["error"] = std::string(e.name());
  }
  return w;
}

}  // namespace

ordered_json analysis_report(const BelochParams& pr) {
  ordered_json j = header("analyze");
  j["params"] = params_json(pr);
  j["discriminant"] = pr.discriminant();
  j["hessian"] = hessian_at_singular(pr);
  const ShapeClass shape = classify(pr);
  j["shape"] = std::string(shape_name(shape));
  const auto special = special_parameters(pr);
  j["special_parameters"] = special;

  ordered_json notes = ordered_json::array();
  if (!special.empty()) notes.push_back(kIntervalNote);
  if (special.size() == 2) notes.push_back(kTwiceNote);

  if (pr.alpha == 2.0) {
    const FgIntersection fg = fg_intersection_count(pr);
    j["fg_count"] = std::string(intersection_name(fg.cls));
    j["fg_distinct"] = fg.distinct_count;
    ordered_json wit = ordered_json::array();
    for (double r : fg.witnesses) wit.push_back({{"r", r}, {"point", point_json(orbit(pr, r).point())}});
    j["witnesses"] = wit;
  } else {
    j["fg_count"] = nullptr;
    j["fg_distinct"] = nullptr;
    j["witnesses"] = ordered_json::array();
  }

  if (shape == ShapeClass::Node) {
    j["winding"] = winding_block(pr);
    if (pr.p < 1.0) notes.push_back(kAnchorNote);
  } else {
    j["winding"] = nullptr;
  }
  j["errata_notes"] = notes;
  return j;
}

ordered_json solve_report(const CubicEq& eq) {
  ordered_json j = header("solve");
  j["cubic"] = {{"a", eq.a}, {"b", eq.b}, {"c", eq.c}};
  ordered_json roots = ordered_json::array();
  ordered_json folds = ordered_json::array();
  for (const FoldSolution& s : solve_by_folding(eq)) {
    roots.push_back(s.r);
    folds.push_back({{"r", s.r},
                     {"line", {s.fold.a(), s.fold.b(), s.fold.c()}},
                     {"anchor_image", point_json(s.anchor_image)},
                     {"marked_image", point_json(s.marked_image)},
                     {"residual_anchor", s.residual_anchor},
                     {"residual_marked", s.residual_marked}});
  }
  j["roots"] = roots;
  j["folds"] = folds;
  return j;
}

ordered_json winding_report(const BelochParams& pr) {
  ordered_json j = header("winding");
  j["params"] = params_json(pr);
  j["discriminant"] = pr.discriminant();
  j["winding"] = winding_block(pr);
  ordered_json notes = ordered_json::array();
  if (pr.p < 1.0) notes.push_back(kAnchorNote);
  j["errata_notes"] = notes;
  return j;
}

ordered_json surface_report(const BelochParams& pr) {
  ordered_json j = header("surface");
  j["params"] = params_json(pr);
  j["discriminant"] = pr.discriminant();
  ordered_json pts = ordered_json::array();
  for (const CriticalPoint& c : critical_points(pr)) {
    pts.push_back({{"point", point_json(c.location)},
                   {"z", c.z_value},
                   {"kind", std::string(critical_kind_name(c.kind))},
                   {"hessian_det", c.hessian.det()},
                   {"fxx", c.hessian.fxx},
                   {"multiplicity", c.multiplicity},
                   {"changes_sign", c.changes_sign}});
  }
  j["critical_points"] = pts;
  const ConjectureVerdict v = conjecture_verdict(pr);
  j["sign_class"] = v.sign_class;
  j["census"] = {{"local_min", v.local_min},
                 {"local_max", v.local_max},
                 {"saddle", v.saddles},
                 {"degenerate", v.degenerate},
                 {"distinct", v.distinct_points},
                 {"with_multiplicity", v.points_with_multiplicity}};
  j["kind_at_p"] = std::string(critical_kind_name(v.kind_at_p));
  j["observed_extremum"] = v.observed_extremum;
  j["matches_conjecture"] = v.matches_conjecture;
  j["notes"] = v.notes;
  return j;
}

ordered_json general_report(const GeneralCubic& c) {
  ordered_json j = header("classify-general");
  j["coeffs"] = {c.a0, c.a1, c.a2, c.a3, c.a4};
  const Normalization n = normalize(c);
  j["normalization"] = {{"beta", n.beta}, {"alpha", n.alpha}, {"p", n.p}, {"q", n.q}};
  const OriginReport rep = classify_origin(c);
  j["paper_value"] = rep.paper_value;
  j["corrected_value"] = rep.corrected_value;
  j["hessian_det"] = rep.hessian_det;
  j["shape"] = std::string(shape_name(rep.shape));
  j["sampled_shape"] = std::string(shape_name(rep.sampled_shape));
  j["discrepancy"] = rep.discrepancy;
  ordered_json notes = ordered_json::array();
  if (rep.discrepancy) {
    notes.push_back(
        "2 a3/sqrt(a1 a4) + (a2/2a1)^2 equals 4p + q^2 of the normalization, but with alpha = a0 beta the "
        "shape follows the sign of 2 alpha p + q^2 = (4 a0 a3 + a2^2)/(4 a1^2)");
  }
  j["errata_notes"] = notes;
  return j;
}

std::string dump_report(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace beloch
