#pragma once

#include <cmath>
#include <optional>

namespace beloch {

/// Absolute tolerance for evaluations of normalized lines and distances.
inline constexpr double kGeomEps = 1e-9;

struct Point {
  double x{0.0};
  double y{0.0};

  constexpr Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Point&) const = default;

  double norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double distance(const Point& a, const Point& b) { return (a - b).norm(); }

/// Implicit line a*x + b*y + c = 0, always stored normalized:
/// a^2 + b^2 = 1 and the first nonzero of (a, b) is positive. Two lines are
/// the same set iff their coefficients agree.
class Line {
 public:
  /// Throws DegenerateInput when a and b both vanish or a coefficient is not finite.
  static Line from_coefficients(double a, double b, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  /// Signed distance of `pt` from the line.
  double eval(const Point& pt) const { return a_ * pt.x + b_ * pt.y + c_; }
  Point normal() const { return {a_, b_}; }

  bool operator==(const Line&) const = default;

 private:
  Line(double a, double b, double c) : a_(a), b_(b), c_(c) {}
  double a_;
  double b_;
  double c_;
};

/// Largest absolute coefficient difference between two normalized lines.
double coefficient_distance(const Line& l1, const Line& l2);

struct Segment {
  Point from;
  Point to;

  /// Zero-length segments behave as points.
  bool degenerate() const { return distance(from, to) <= kGeomEps; }
};

struct Circle {
  Point center;
  double radius{0.0};
};

/// Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rect {
  double x0{0.0};
  double y0{0.0};
  double x1{0.0};
  double y1{0.0};

  bool contains(const Point& p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
  bool empty() const { return !(x1 > x0) || !(y1 > y0); }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

enum class CirclePosition { Inside, On, Outside };

Point reflect_point(const Point& p, const Line& l);

/// Throws DegenerateInput when p and q coincide.
Line perp_bisector(const Point& p, const Point& q);

/// -1, 0 or +1; values within kGeomEps of the line report 0.
int side_of(const Line& l, const Point& p);

bool segments_intersect(const Segment& s1, const Segment& s2);

/// Intersection point of two properly crossing (non-parallel) segments.
std::optional<Point> crossing_point(const Segment& s1, const Segment& s2);

CirclePosition position_wrt_circle(const Point& p, const Circle& c);

}  // namespace beloch
