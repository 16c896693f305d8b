#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "beloch/geom.hpp"
#include "beloch/poly.hpp"

namespace beloch {

/// Parameters of the curve
///   F(x,y) = alpha (q-y)^2 - (q+y)(q-y)(p-x) - (p-x)^2 (p+x) = 0,
/// traced by reflecting P(p,q) across every fold that carries the anchor
/// (-alpha/2, 0) onto the line x = alpha/2. The origami setting is alpha = 2.
struct BelochParams {
  double p{0.0};
  double q{0.0};
  double alpha{2.0};

  /// Throws InvalidArgument for non-finite values or alpha == 0.
  static BelochParams make(double p, double q, double alpha = 2.0);

  Point singular_point() const { return {p, q}; }
  Point anchor() const { return {-0.5 * alpha, 0.0}; }
  /// Image of the anchor for parameter r: (alpha/2, 2r).
  Point anchor_image(double r) const { return {0.5 * alpha, 2.0 * r}; }
  /// 2 alpha p + q^2, i.e. 4p + q^2 in the origami setting. Its sign decides the shape at P.
  double discriminant() const { return 2.0 * alpha * p + q * q; }
  /// 1 + |p| + q^2, the reference size for the discriminant band.
  double scale() const;
};

/// Relative band around 0 inside which the discriminant is considered zero.
inline constexpr double kClassifyEps = 1e-9;

struct OrbitPoint {
  double r;
  double s;
  double t;

  Point point() const { return {s, t}; }
};

enum class ShapeClass { IsolatedPoint, Cusp, Node, Degenerate };
std::string_view shape_name(ShapeClass shape);

struct Gradient {
  double fx;
  double fy;

  double norm() const;
};

struct SecondPartials {
  double fxx;
  double fxy;
  double fyy;

  double det() const { return fxx * fyy - fxy * fxy; }
};

double f_eval(const BelochParams& params, double x, double y);
Gradient gradient(const BelochParams& params, double x, double y);
SecondPartials second_partials(const BelochParams& params, double x, double y);

/// Hessian determinant at P: -4(2 alpha p + q^2); exactly -4(4p+q^2) for alpha = 2.
double hessian_at_singular(const BelochParams& params);

/// Fold for parameter r: alpha x + 2 r y - 2 r^2 = 0 (x + r y - r^2 = 0 when alpha = 2).
Line fold_for(const BelochParams& params, double r);

/// Closed-form reflection P' of P across fold_for(params, r).
OrbitPoint orbit(const BelochParams& params, double r);

/// Parameters where the orbit passes through P: real roots of r^2 - q r - alpha p / 2.
/// A double root is reported once.
std::vector<double> special_parameters(const BelochParams& params);

ShapeClass classify(const BelochParams& params);

// --- local sampling oracle -------------------------------------------------

using PlaneFunction = std::function<double(double, double)>;

struct SignPattern {
  int flips{0};
  std::vector<double> flip_angles;  // radians in [0, 2pi)
};

/// Sign changes of f along the circle of `radius` around `center`.
SignPattern sign_pattern_on_circle(const PlaneFunction& f, const Point& center, double radius,
                                   int samples = 8192);

/// Shape read off one sign pattern: 0 flips isolated, 4 node, 2 flips close
/// together (one-sided branch) cusp, anything else degenerate.
ShapeClass shape_from_pattern(const SignPattern& pattern);

/// Shape agreed by patterns at every radius, Degenerate when they disagree.
ShapeClass sample_local_shape(const PlaneFunction& f, const Point& center, const std::vector<double>& radii);

// --- numerical scans -------------------------------------------------------

struct ScanResult {
  std::vector<Point> points;  // sorted by y, then x
  int non_converged{0};       // seeds that hit NoConvergence
};

/// All zeros of grad F inside `window`, by grid seeding plus damped Newton.
/// Throws InvalidArgument when grid_n < 16 or the window is empty.
ScanResult stationary_points(const BelochParams& params, const Rect& window, int grid_n);

/// Stationary points that also lie on the curve.
ScanResult singular_scan(const BelochParams& params, const Rect& window, int grid_n);

// --- sections and segment relation ----------------------------------------

struct SectionPolys {
  Poly vertical;    // F(-1, t) in t
  Poly horizontal;  // F(s, 0) in s
};

/// Requires alpha == 2 (InvalidArgument otherwise).
SectionPolys section_polys(const BelochParams& params);

enum class SegmentRelation { Coincide, Intersect, Disjoint };
std::string_view relation_name(SegmentRelation rel);

struct RelationVotes {
  SegmentRelation by_segments;  // AP against A'P' directly
  SegmentRelation by_circle;    // A' against the circle around P through A
  SegmentRelation by_abscissa;  // sign of p - s
};

RelationVotes segment_relation_votes(const BelochParams& params, double r);

/// The agreed relation of segments AP and A'P'. Throws OracleDisagreement
/// when the three tests disagree away from the P' = P boundary.
SegmentRelation segment_relation(const BelochParams& params, double r);

}  // namespace beloch
