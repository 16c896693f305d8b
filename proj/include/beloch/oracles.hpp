#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "beloch/curve.hpp"
#include "beloch/geom.hpp"

// Brute-force checks that share no code path with the root isolation or
// the closed forms they audit.
namespace beloch::oracle {

/// Distinct real roots of x^3 - a x^2 - b x + c by the trigonometric /
/// Cardano formulas, each polished by Newton steps. Sorted ascending.
std::vector<double> cardano_roots(double a, double b, double c);

/// Roots of f in [lo, hi] found from sign changes on an n-cell grid and
/// bisection. Misses roots of even multiplicity by design.
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi, int n);

/// Reflection of P across the fold for parameter r, from the raw fold
/// coefficients (alpha, 2r, -2r^2) without normalization.
Point reflect_raw(const BelochParams& params, double r);

/// Central-difference gradient of F.
Gradient numeric_gradient(const BelochParams& params, double x, double y, double h = 1e-6);

}  // namespace beloch::oracle

namespace beloch {

struct VerifyOptions {
  std::uint64_t seed{1};
  int trials{200};
};

/// Randomized cross-checks of every module against the oracles. Writes one
/// line per suite and a reproducer for every disagreement; returns whether
/// all suites passed.
bool run_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace beloch
