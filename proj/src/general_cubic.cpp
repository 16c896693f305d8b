#include "beloch/general_cubic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "beloch/error.hpp"

namespace beloch {

double GeneralCubic::eval(double x, double y) const {
  return a0 * y * y - a1 * x * y * y - a2 * x * y - a3 * x * x - a4 * x * x * x;
}

namespace {

void require_finite(const GeneralCubic& c) {
  for (double v : {c.a0, c.a1, c.a2, c.a3, c.a4}) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "coefficients must be finite");
  }
}

int banded_sign(double v, double band) { return v < -band ? -1 : (v > band ? 1 : 0); }

}  // namespace

Normalization normalize(const GeneralCubic& c) {
  require_finite(c);
  if (c.a0 == 0.0 || c.a1 == 0.0 || c.a4 == 0.0) {
    throw Error(ErrorCode::ZeroCoefficient, "a0, a1 and a4 must be nonzero");
  }
  if (c.a1 * c.a4 <= 0.0) throw Error(ErrorCode::SignObstruction, "a1 a4 must be positive");
  const double beta = std::sqrt(c.a4 / (c.a1 * c.a1 * c.a1));
  return {beta, c.a0 * beta, c.a3 / (2.0 * c.a1 * c.a1 * beta), c.a2 / (2.0 * c.a1)};
}

GeneralCubic reexpand(const Normalization& n, double a1) {
  return {n.alpha / n.beta, a1, 2.0 * n.q * a1, 2.0 * n.p * a1 * a1 * n.beta, a1 * a1 * a1 * n.beta * n.beta};
}

double paper_criterion(const GeneralCubic& c) {
  require_finite(c);
  if (c.a1 * c.a4 <= 0.0) throw Error(ErrorCode::SignObstruction, "a1 a4 must be positive");
  const double h = c.a2 / (2.0 * c.a1);
  return 2.0 * c.a3 / std::sqrt(c.a1 * c.a4) + h * h;
}

double hessian_origin(const GeneralCubic& c) { return -4.0 * c.a0 * c.a3 - c.a2 * c.a2; }

std::vector<double> origin_sampling_radii(const GeneralCubic& c) {
  // Eigenvalues of the quadratic part [[-a3, -a2/2], [-a2/2, a0]].
  const double tr = c.a0 - c.a3;
  const double det = -c.a0 * c.a3 - 0.25 * c.a2 * c.a2;
  const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
  const double lam_big = std::abs(0.5 * tr) + disc;
  const double lam_small = lam_big > 0.0 ? std::abs(det) / lam_big : 0.0;
  const double cubic = std::abs(c.a1) + std::abs(c.a4);
  double reach = 1e-2;
  if (lam_small > 1e-6 * (1.0 + lam_big)) reach = std::min(reach, 1e-2 * lam_small / cubic);
  return {reach, 0.1 * reach};
}

OriginReport classify_origin(const GeneralCubic& c) {
  const Normalization n = normalize(c);
  OriginReport rep{};
  rep.paper_value = paper_criterion(c);
  rep.corrected_value = (4.0 * c.a0 * c.a3 + c.a2 * c.a2) / (4.0 * c.a1 * c.a1);
  rep.hessian_det = hessian_origin(c);

  const auto f = [&c](double x, double y) { return c.eval(x, y); };
  rep.sampled_shape = sample_local_shape(f, {0.0, 0.0}, origin_sampling_radii(c));

  const double corrected_band = kClassifyEps * (1.0 + std::abs(n.alpha * n.p) + n.q * n.q);
  const double paper_band = kClassifyEps * (1.0 + std::abs(4.0 * n.p) + n.q * n.q);
  const int corrected_sign = banded_sign(rep.corrected_value, corrected_band);
  const int paper_sign = banded_sign(rep.paper_value, paper_band);
  if (corrected_sign < 0) {
    rep.shape = ShapeClass::IsolatedPoint;
  } else if (corrected_sign > 0) {
    rep.shape = ShapeClass::Node;
  } else {
    rep.shape = rep.sampled_shape == ShapeClass::Cusp ? ShapeClass::Cusp : ShapeClass::Degenerate;
  }
  rep.discrepancy = corrected_sign != paper_sign;
  return rep;
}

GeneralCubic ophiuride(double a, double b) {
  const GeneralCubic c{-b, -1.0, -a, 0.0, -1.0};
  require_finite(c);
  return c;
}

GeneralCubic cissoid(double a) {
  if (a == 0.0) throw Error(ErrorCode::InvalidArgument, "cissoid needs a != 0");
  const GeneralCubic c{2.0 * a, -1.0, 0.0, 0.0, -1.0};
  require_finite(c);
  return c;
}

}  // namespace beloch
