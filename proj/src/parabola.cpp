#include "beloch/parabola.hpp"

#include <cmath>

#include "beloch/error.hpp"

namespace beloch {

std::string_view side_name(ParabolaSide side) {
  switch (side) {
    case ParabolaSide::Left: return "Left";
    case ParabolaSide::On: return "On";
    case ParabolaSide::Right: return "Right";
  }
  return "On";
}

std::string_view intersection_name(IntersectionClass cls) {
  switch (cls) {
    case IntersectionClass::Zero: return "Zero";
    case IntersectionClass::One: return "One";
    case IntersectionClass::TwoOrMore: return "TwoOrMore";
  }
  return "Zero";
}

Line tangent_at(double r) {
  const Point g = parabola_point(r);
  const Point n{4.0, 2.0 * g.y};
  return Line::from_coefficients(n.x, n.y, -dot(n, g));
}

ParabolaSide side_of_parabola(const Point& pt) {
  const double v = 4.0 * pt.x + pt.y * pt.y;
  const double eps = 1e-9 * (1.0 + std::abs(pt.x) + pt.y * pt.y);
  if (v < -eps) return ParabolaSide::Left;
  if (v > eps) return ParabolaSide::Right;
  return ParabolaSide::On;
}

Poly landing_polynomial(const BelochParams& pr) {
  if (pr.alpha != 2.0) throw Error(ErrorCode::InvalidArgument, "landing polynomial needs alpha = 2");
  const double p = pr.p;
  const double q = pr.q;
  const Poly s_num({-p, -2.0 * q, 2.0 + p});
  const Poly t_num({q, -2.0 * p, -q, 2.0});
  const Poly denom({1.0, 0.0, 1.0});
  return add(scale(multiply(s_num, denom), 4.0), multiply(t_num, t_num));
}

FgIntersection fg_intersection_count(const BelochParams& pr) {
  Poly n = landing_polynomial(pr);
  std::vector<double> witnesses;
  for (const Root& root : real_roots(n)) witnesses.push_back(root.value);
  const int count = count_distinct_real_roots(n);

  // P itself belongs to the curve even when no orbit point reaches it; it can
  // only sit on the parabola when 4p + q^2 = 0, where the orbit already
  // passes through it, so it never adds an element.
  int total = count;
  if (classify(pr) == ShapeClass::IsolatedPoint && side_of_parabola(pr.singular_point()) == ParabolaSide::On) {
    ++total;
  }
  IntersectionClass cls = total == 0 ? IntersectionClass::Zero
                          : total == 1 ? IntersectionClass::One
                                       : IntersectionClass::TwoOrMore;
  return {cls, total, std::move(witnesses), std::move(n)};
}

}  // namespace beloch
