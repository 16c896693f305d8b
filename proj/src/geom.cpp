#include "beloch/geom.hpp"

#include <algorithm>
#include <string>

#include "beloch/error.hpp"

namespace beloch {

Line Line::from_coefficients(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw Error(ErrorCode::DegenerateInput, "line coefficients must be finite");
  }
  const double n = std::hypot(a, b);
  if (n == 0.0) {
    throw Error(ErrorCode::DegenerateInput, "line with zero normal");
  }
  double s = 1.0 / n;
  if (a < 0.0 || (a == 0.0 && b < 0.0)) s = -s;
  // Exact zeros stay +0 so that == on coefficients is reliable.
  auto fix = [](double v) { return v == 0.0 ? 0.0 : v; };
  return Line(fix(a * s), fix(b * s), fix(c * s));
}

double coefficient_distance(const Line& l1, const Line& l2) {
  return std::max({std::abs(l1.a() - l2.a()), std::abs(l1.b() - l2.b()), std::abs(l1.c() - l2.c())});
}

Point reflect_point(const Point& p, const Line& l) {
  const double d = l.eval(p);
  return {p.x - 2.0 * d * l.a(), p.y - 2.0 * d * l.b()};
}

Line perp_bisector(const Point& p, const Point& q) {
  if (p == q) {
    throw Error(ErrorCode::DegenerateInput, "perpendicular bisector of coincident points");
  }
  const Point n = q - p;
  // |X - p|^2 = |X - q|^2  <=>  2(q - p).X - (|q|^2 - |p|^2) = 0
  return Line::from_coefficients(n.x, n.y, -0.5 * (dot(q, q) - dot(p, p)));
}

int side_of(const Line& l, const Point& p) {
  const double v = l.eval(p);
  if (std::abs(v) <= kGeomEps) return 0;
  return v > 0.0 ? 1 : -1;
}

namespace {

// Orientation of c relative to the directed line a->b, with a relative band.
int orient(const Point& a, const Point& b, const Point& c) {
  const Point u = b - a;
  const Point v = c - a;
  const double det = cross(u, v);
  const double band = 1e-12 * u.norm() * v.norm();
  if (std::abs(det) <= band) return 0;
  return det > 0.0 ? 1 : -1;
}

// c known collinear with a-b: is it within the closed bounding box?
bool within_box(const Point& a, const Point& b, const Point& c) {
  const double tol = kGeomEps;
  return c.x >= std::min(a.x, b.x) - tol && c.x <= std::max(a.x, b.x) + tol &&
         c.y >= std::min(a.y, b.y) - tol && c.y <= std::max(a.y, b.y) + tol;
}

double point_segment_distance(const Point& p, const Segment& s) {
  const Point d = s.to - s.from;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.from);
  const double u = std::clamp(dot(p - s.from, d) / len2, 0.0, 1.0);
  return distance(p, s.from + d * u);
}

}  // namespace

bool segments_intersect(const Segment& s1, const Segment& s2) {
  const bool d1 = s1.degenerate();
  const bool d2 = s2.degenerate();
  if (d1 && d2) return distance(s1.from, s2.from) <= kGeomEps;
  if (d1) return point_segment_distance(s1.from, s2) <= kGeomEps;
  if (d2) return point_segment_distance(s2.from, s1) <= kGeomEps;

  const int o1 = orient(s1.from, s1.to, s2.from);
  const int o2 = orient(s1.from, s1.to, s2.to);
  const int o3 = orient(s2.from, s2.to, s1.from);
  const int o4 = orient(s2.from, s2.to, s1.to);

  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_box(s1.from, s1.to, s2.from)) return true;
  if (o2 == 0 && within_box(s1.from, s1.to, s2.to)) return true;
  if (o3 == 0 && within_box(s2.from, s2.to, s1.from)) return true;
  if (o4 == 0 && within_box(s2.from, s2.to, s1.to)) return true;
  return false;
}

std::optional<Point> crossing_point(const Segment& s1, const Segment& s2) {
  const Point d1 = s1.to - s1.from;
  const Point d2 = s2.to - s2.from;
  const double den = cross(d1, d2);
  if (std::abs(den) <= 1e-14 * d1.norm() * d2.norm()) return std::nullopt;
  const Point w = s2.from - s1.from;
  const double u = cross(w, d2) / den;
  const double v = cross(w, d1) / den;
  const double tol = 1e-12;
  if (u < -tol || u > 1.0 + tol || v < -tol || v > 1.0 + tol) return std::nullopt;
  return s1.from + d1 * u;
}

CirclePosition position_wrt_circle(const Point& p, const Circle& c) {
  const double d = distance(p, c.center);
  if (std::abs(d - c.radius) <= kGeomEps) return CirclePosition::On;
  return d < c.radius ? CirclePosition::Inside : CirclePosition::Outside;
}

}  // namespace beloch
