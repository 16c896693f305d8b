#include "beloch/cubic_fold.hpp"

#include <cmath>

#include "beloch/error.hpp"
#include "beloch/poly.hpp"

namespace beloch {

double CubicEq::scale() const { return 1.0 + std::abs(a) + std::abs(b) + std::abs(c); }

Line fold_line(double r) { return Line::from_coefficients(1.0, r, -r * r); }

Point reflect_across_fold(const Point& pt, double r) {
  const double n2 = 1.0 + r * r;
  const double d = (pt.x + r * pt.y - r * r) / n2;
  return {pt.x - 2.0 * d, pt.y - 2.0 * d * r};
}

FoldCheck verify_fold(const CubicEq& eq, double r) {
  const Point a_img = reflect_across_fold(kFoldAnchor, r);
  const Point p_img = reflect_across_fold(eq.marked_point(), r);
  return {std::abs(a_img.x - 1.0), std::abs(p_img.y - eq.guide_y()), std::abs(eq.eval(r))};
}

std::vector<FoldSolution> solve_by_folding(const CubicEq& eq) {
  const Poly cubic({eq.c, -eq.b, -eq.a, 1.0});
  std::vector<FoldSolution> out;
  for (const Root& root : real_roots(cubic)) {
    const double r = root.value;
    const Point a_img = reflect_across_fold(kFoldAnchor, r);
    const Point p_img = reflect_across_fold(eq.marked_point(), r);
    out.push_back({r, fold_line(r), a_img, p_img, std::abs(a_img.x - 1.0), std::abs(p_img.y - eq.guide_y())});
  }
  return out;
}

double root_from_fold(const Line& fold) {
  const double tol = 1e-9;
  if (std::abs(fold.a()) <= tol) {
    throw Error(ErrorCode::NotAFoldLine, "line is horizontal");
  }
  const double r = fold.b() / fold.a();
  const double constant = fold.c() / fold.a();
  if (std::abs(constant + r * r) > tol * (1.0 + r * r)) {
    throw Error(ErrorCode::NotAFoldLine, "constant term is not -(y coefficient)^2 after scaling");
  }
  return r;
}

}  // namespace beloch
