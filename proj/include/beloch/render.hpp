#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "beloch/curve.hpp"
#include "beloch/geom.hpp"

namespace beloch {

/// Orbit of P over [r_lo, r_hi]; without a range the parameter interval is
/// widened until both ends of the trace leave the viewport.
struct OrbitTrace {
  BelochParams params;
  std::optional<double> r_lo;
  std::optional<double> r_hi;
};

/// The parabola 2 alpha x + y^2 = 0 (4x + y^2 = 0 for alpha = 2).
struct ParabolaTrace {
  double alpha{2.0};
};

struct FoldTrace {
  BelochParams params;
  double r{0.0};
};

struct CircleTrace {
  Circle circle;
};

enum class MarkerKind { SingularPoint, Isolated, Anchor, Witness };

struct Marker {
  Point at;
  MarkerKind kind;
};

using SceneItem = std::variant<OrbitTrace, ParabolaTrace, FoldTrace, CircleTrace, Marker>;

struct PlotScene {
  std::vector<SceneItem> items;
  Rect viewport{-6.0, -6.0, 6.0, 6.0};
  int samples_per_curve{512};
};

/// Deterministic SVG 1.1 text. Geometry is written in math coordinates
/// inside a group that flips y. Throws EmptyScene for a scene without items
/// and InvalidArgument for an empty viewport or fewer than 64 samples.
std::string render_svg(const PlotScene& scene);

/// Orbit, parabola, P (as an isolated-point marker when P is isolated), the
/// anchor and the parabola-landing witnesses. Without a viewport the default
/// [-6,6]^2 is widened to contain every marker.
PlotScene make_scene(const BelochParams& params, std::optional<Rect> viewport = std::nullopt);

/// Parameter half-width R such that orbit(-R) and orbit(R) lie outside `view`.
double escape_parameter(const BelochParams& params, const Rect& view);

/// `r,s,t` header then n rows at evenly spaced r, all fields with 17
/// significant digits. Throws BadRange unless r_min < r_max and n >= 2.
std::string export_orbit_csv(const BelochParams& params, double r_min, double r_max, int n);

/// Inverse of export_orbit_csv. Throws InvalidArgument on malformed text.
std::vector<OrbitPoint> parse_orbit_csv(std::string_view text);

}  // namespace beloch
