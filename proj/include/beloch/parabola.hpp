#pragma once

#include <string_view>
#include <vector>

#include "beloch/curve.hpp"
#include "beloch/geom.hpp"
#include "beloch/poly.hpp"

namespace beloch {

// The parabola 4x + y^2 = 0, with focus (-1, 0) and directrix x = 1.

enum class ParabolaSide { Left, On, Right };
std::string_view side_name(ParabolaSide side);

/// Point of tangency (-r^2, 2r) for parameter r.
inline Point parabola_point(double r) { return {-r * r, 2.0 * r}; }

/// Tangent line at (-r^2, 2r), built from the gradient (4, 2y) of 4x + y^2.
Line tangent_at(double r);

ParabolaSide side_of_parabola(const Point& pt);

enum class IntersectionClass { Zero, One, TwoOrMore };
std::string_view intersection_name(IntersectionClass cls);

struct FgIntersection {
  IntersectionClass cls;
  int distinct_count;
  std::vector<double> witnesses;  // orbit parameters r landing on the parabola
  Poly landing;                   // N(r) = 4 S(r)(r^2+1) + T(r)^2
};

/// N(r) whose real roots are the orbit parameters landing on 4x + y^2 = 0;
/// S and T are the numerators of the orbit coordinates. Requires alpha == 2.
Poly landing_polynomial(const BelochParams& params);

/// Requires alpha == 2 (InvalidArgument otherwise).
FgIntersection fg_intersection_count(const BelochParams& params);

}  // namespace beloch
