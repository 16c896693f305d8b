#pragma once

#include "beloch/curve.hpp"

namespace beloch {

/// a0 y^2 - a1 x y^2 - a2 x y - a3 x^2 - a4 x^3 = 0, singular at the origin.
struct GeneralCubic {
  double a0{0.0};
  double a1{0.0};
  double a2{0.0};
  double a3{0.0};
  double a4{0.0};

  double eval(double x, double y) const;
  bool operator==(const GeneralCubic&) const = default;
};

/// Scaling x by a1*beta turns beta times the cubic into
/// alpha y^2 - x y^2 - 2q x y - 2p x^2 - x^3.
struct Normalization {
  double beta;
  double alpha;
  double p;
  double q;

  BelochParams params() const { return BelochParams::make(p, q, alpha); }
};

/// Throws ZeroCoefficient when a0, a1 or a4 is zero and SignObstruction
/// when a1 a4 < 0 (beta would not be real).
Normalization normalize(const GeneralCubic& c);

/// Inverse of normalize for a given a1.
GeneralCubic reexpand(const Normalization& n, double a1);

/// 2 a3 / sqrt(a1 a4) + (a2 / 2 a1)^2, which equals 4p + q^2 of the
/// normalization. Throws SignObstruction when a1 a4 <= 0.
double paper_criterion(const GeneralCubic& c);

/// Hessian determinant of the cubic at the origin: -4 a0 a3 - a2^2.
double hessian_origin(const GeneralCubic& c);

struct OriginReport {
  double paper_value;      // 2 a3 / sqrt(a1 a4) + (a2 / 2 a1)^2
  double corrected_value;  // (4 a0 a3 + a2^2) / (4 a1^2) = 2 alpha p + q^2
  double hessian_det;
  ShapeClass shape;
  ShapeClass sampled_shape;  // punctured-circle sign patterns around the origin
  bool discrepancy;          // banded signs of paper_value and corrected_value differ
};

/// Shape of the origin, decided by the sign of corrected_value; inside the
/// zero band the sampling oracle decides between Cusp and Degenerate.
OriginReport classify_origin(const GeneralCubic& c);

/// Radii for sampling the sign pattern around the origin, small enough that
/// the quadratic part dominates the cubic part when it is nondegenerate.
std::vector<double> origin_sampling_radii(const GeneralCubic& c);

/// (-b, -1, -a, 0, -1).
GeneralCubic ophiuride(double a, double b);
/// (2a, -1, 0, 0, -1); throws InvalidArgument for a = 0.
GeneralCubic cissoid(double a);

}  // namespace beloch
