#include "beloch/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace beloch::oracle {

std::vector<double> cardano_roots(double a, double b, double c) {
  // x = y + a/3 turns x^3 - a x^2 - b x + c into y^3 + P y + Q.
  const double shift = a / 3.0;
  const double P = -b - a * a / 3.0;
  const double Q = c - a * b / 3.0 - 2.0 * a * a * a / 27.0;
  std::vector<double> ys;
  const double disc = Q * Q / 4.0 + P * P * P / 27.0;
  if (P == 0.0 && Q == 0.0) {
    ys = {0.0};
  } else if (disc > 0.0) {
    const double w = std::sqrt(disc);
    ys = {std::cbrt(-Q / 2.0 + w) + std::cbrt(-Q / 2.0 - w)};
  } else {
    const double m = 2.0 * std::sqrt(-P / 3.0);
    const double arg = std::clamp(3.0 * Q / (P * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) ys.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0));
  }

  std::vector<double> xs;
  for (double y : ys) {
    double x = y + shift;
    for (int it = 0; it < 6; ++it) {
      const double f = ((x - a) * x - b) * x + c;
      const double df = (3.0 * x - 2.0 * a) * x - b;
      if (df == 0.0) break;
      const double nx = x - f / df;
      if (!std::isfinite(nx) || std::abs(nx - x) > 1e-3 * (1.0 + std::abs(x))) break;
      x = nx;
    }
    xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs) {
    if (out.empty() || std::abs(x - out.back()) > 1e-7 * (1.0 + std::abs(x))) out.push_back(x);
  }
  return out;
}

std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi, int n) {
  std::vector<double> out;
  double x0 = lo;
  double f0 = f(x0);
  if (f0 == 0.0) out.push_back(x0);
  for (int i = 1; i <= n; ++i) {
    const double x1 = i == n ? hi : lo + (hi - lo) * i / n;
    const double f1 = f(x1);
    if (f1 == 0.0) {
      out.push_back(x1);
    } else if (f0 != 0.0 && (f0 < 0.0) != (f1 < 0.0)) {
      double a = x0;
      double b = x1;
      double fa = f0;
      for (int it = 0; it < 200 && b - a > 1e-15 * (1.0 + std::abs(a)); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) {
          a = b = m;
          break;
        }
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      out.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  return out;
}

Point reflect_raw(const BelochParams& params, double r) {
  const double na = params.alpha;
  const double nb = 2.0 * r;
  const double nc = -2.0 * r * r;
  const double k = 2.0 * (na * params.p + nb * params.q + nc) / (na * na + nb * nb);
  return {params.p - k * na, params.q - k * nb};
}

Gradient numeric_gradient(const BelochParams& params, double x, double y, double h) {
  return {(f_eval(params, x + h, y) - f_eval(params, x - h, y)) / (2.0 * h),
          (f_eval(params, x, y + h) - f_eval(params, x, y - h)) / (2.0 * h)};
}

}  // namespace beloch::oracle
