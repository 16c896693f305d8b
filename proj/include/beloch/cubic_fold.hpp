#pragma once

#include <vector>

#include "beloch/geom.hpp"

namespace beloch {

/// Monic cubic x^3 - a x^2 - b x + c = 0, stored exactly as given.
struct CubicEq {
  double a{0.0};
  double b{0.0};
  double c{0.0};

  /// The point whose reflection must land on the second guide line: (b, a + c).
  Point marked_point() const { return {b, a + c}; }
  /// Second guide line y = a - c.
  double guide_y() const { return a - c; }
  double eval(double x) const { return ((x - a) * x - b) * x + c; }
  /// 1 + |a| + |b| + |c|, the reference size for residual checks.
  double scale() const;
};

/// Fixed point folded onto the directrix x = 1.
inline constexpr Point kFoldAnchor{-1.0, 0.0};

struct FoldSolution {
  double r;
  Line fold;
  Point anchor_image;  // reflection of (-1, 0); lies on x = 1
  Point marked_image;  // reflection of (b, a + c); lies on y = a - c
  double residual_anchor;
  double residual_marked;
};

struct FoldCheck {
  double residual_anchor;
  double residual_marked;
  double cubic_residual;
};

/// The fold x + r y - r^2 = 0: perpendicular bisector of (-1,0) and (1,2r).
Line fold_line(double r);

/// Reflection across x + r y - r^2 = 0 using its unnormalized form, so that
/// (-1,0) maps to (1, 2r) with no rounding.
Point reflect_across_fold(const Point& pt, double r);

/// One fold per distinct real root of the cubic, sorted by r.
std::vector<FoldSolution> solve_by_folding(const CubicEq& eq);

FoldCheck verify_fold(const CubicEq& eq, double r);

/// The y-intercept r of a line of the form x + r y - r^2 = 0. Throws
/// NotAFoldLine for any other line.
double root_from_fold(const Line& fold);

}  // namespace beloch
