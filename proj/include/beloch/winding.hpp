#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "beloch/curve.hpp"
#include "beloch/geom.hpp"

namespace beloch {

using PlaneCurve = std::function<Point(double)>;

/// A closed curve sampled over [r_lo, r_hi]; the curve function is kept so
/// that consumers can refine the sampling locally.
struct ClosedLoop {
  PlaneCurve curve;
  double r_lo{0.0};
  double r_hi{0.0};
  std::vector<OrbitPoint> samples;  // r strictly increasing
  bool closed{false};               // first and last sample within 1e-8

  /// `n` samples uniformly spaced in the parameter (n >= 3).
  static ClosedLoop from_curve(PlaneCurve curve, double r_lo, double r_hi, int n);
};

/// Parameters where the orbit passes through its double point, in order.
/// Throws NotANode unless the discriminant is above the classification band.
std::pair<double, double> loop_range(const BelochParams& params);

/// The closed part of the orbit between its two passes through P.
ClosedLoop beloch_loop(const BelochParams& params, int base_samples = 1024);

struct WindingResult {
  std::optional<int> value;  // empty when the loop passes through the center
  double min_distance_to_center{0.0};
  int refinement_rounds{0};
};

/// Throws InvalidArgument for an open loop, RefinementLimit when 20 rounds
/// of local bisection do not settle the angle steps.
WindingResult winding_number(const ClosedLoop& loop, const Point& center);

struct RayCrossings {
  int east{0};
  int north{0};
  int west{0};
  int south{0};
  int tangential{0};  // non-transversal crossings, counted by sign-change parity
};

/// Crossings of the four axis-parallel rays from `center` with the loop.
RayCrossings axis_ray_crossings(const ClosedLoop& loop, const Point& center);

/// Whether the curve passes through the anchor (-alpha/2, 0).
bool curve_through_anchor(const BelochParams& params);

struct LoopSections {
  std::vector<double> on_x_axis;    // s of loop points with t = 0
  std::vector<double> on_anchor_x;  // t of loop points with s = -1
};

/// Where the closed loop meets y = 0 and x = -1. Requires alpha == 2.
LoopSections loop_axis_sections(const BelochParams& params);

}  // namespace beloch
