#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "beloch/curve.hpp"

namespace beloch {

enum class CriticalKind { LocalMin, LocalMax, Saddle, DegenerateCritical };
std::string_view critical_kind_name(CriticalKind kind);

struct CriticalPoint {
  Point location;
  double z_value;
  CriticalKind kind;
  SecondPartials hessian;
  /// For degenerate points: whether F takes both signs arbitrarily close
  /// (so the point is no extremum).
  bool changes_sign;
  /// Multiplicity as a common zero of F_x and F_y.
  int multiplicity;
};

/// Classification of a critical point by the second-derivative test.
CriticalKind kind_from_hessian(const SecondPartials& h);

/// Critical points of z = F(x, y), found by eliminating x through F_y = 0
/// (x = p - 2(q - y)/y for y != 0) and solving the resulting quartic in y,
/// plus the y = 0 branch. P = (p, q) is always present, exactly. Sorted by
/// y, then x. Requires alpha == 2.
std::vector<CriticalPoint> critical_points(const BelochParams& params);

/// The quartic in y whose roots give the y != 0 critical points.
Poly critical_quartic(const BelochParams& params);

struct ConjectureVerdict {
  int sign_class;  // banded sign of 4p + q^2
  int local_min{0};
  int local_max{0};
  int saddles{0};
  int degenerate{0};
  int distinct_points{0};
  int points_with_multiplicity{0};
  CriticalKind kind_at_p;
  /// "LocalMin", "LocalMax" or "none".
  std::string observed_extremum;
  bool matches_conjecture{false};
  std::vector<std::string> notes;

  int extrema() const { return local_min + local_max; }
};

/// Structural comparison of the critical-point census with the expected
/// three-row picture: (i) 4p+q^2 < 0: an extremum at P and one saddle
/// elsewhere; (ii) = 0: no extremum and one saddle-type point at P;
/// (iii) > 0: one extremum elsewhere and the saddle at P. Which extremum
/// polarity occurs is reported rather than assumed.
ConjectureVerdict conjecture_verdict(const BelochParams& params);

}  // namespace beloch
