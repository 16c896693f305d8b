#include "beloch/surface.hpp"

#include <algorithm>
#include <cmath>

#include "beloch/error.hpp"
#include "beloch/poly.hpp"

namespace beloch {

std::string_view critical_kind_name(CriticalKind kind) {
  switch (kind) {
    case CriticalKind::LocalMin: return "LocalMin";
    case CriticalKind::LocalMax: return "LocalMax";
    case CriticalKind::Saddle: return "Saddle";
    case CriticalKind::DegenerateCritical: return "DegenerateCritical";
  }
  return "DegenerateCritical";
}

CriticalKind kind_from_hessian(const SecondPartials& h) {
  const double size = std::abs(h.fxx) + std::abs(h.fyy) + 2.0 * std::abs(h.fxy);
  const double det = h.det();
  if (std::abs(det) <= 1e-10 * (1.0 + size * size)) return CriticalKind::DegenerateCritical;
  if (det < 0.0) return CriticalKind::Saddle;
  return h.fxx > 0.0 ? CriticalKind::LocalMin : CriticalKind::LocalMax;
}

Poly critical_quartic(const BelochParams& pr) {
  const double p = pr.p;
  const double q = pr.q;
  // y^2 F_x with x = p - 2(q - y)/y, negated:
  //   y^4 + (12 + 8p - q^2) y^2 - (8pq + 24q) y + 12 q^2
  return Poly({12.0 * q * q, -(8.0 * p * q + 24.0 * q), 12.0 + 8.0 * p - q * q, 0.0, 1.0});
}

namespace {

Point polish(const BelochParams& pr, Point x) {
  for (int it = 0; it < 8; ++it) {
    const Gradient g = gradient(pr, x.x, x.y);
    const SecondPartials h = second_partials(pr, x.x, x.y);
    const double det = h.det();
    if (det == 0.0 || g.norm() == 0.0) break;
    const Point step{-(h.fyy * g.fx - h.fxy * g.fy) / det, -(-h.fxy * g.fx + h.fxx * g.fy) / det};
    const Point next = x + step;
    if (!next.finite() || gradient(pr, next.x, next.y).norm() >= g.norm()) break;
    x = next;
  }
  return x;
}

CriticalPoint make_point(const BelochParams& pr, const Point& at, int multiplicity) {
  const SecondPartials h = second_partials(pr, at.x, at.y);
  const CriticalKind kind = kind_from_hessian(h);
  bool changes_sign = kind == CriticalKind::Saddle;
  if (kind == CriticalKind::DegenerateCritical) {
    const double z = f_eval(pr, at.x, at.y);
    const auto shifted = [&pr, z](double x, double y) { return f_eval(pr, x, y) - z; };
    changes_sign = sign_pattern_on_circle(shifted, at, 1e-3).flips > 0;
  }
  return {at, f_eval(pr, at.x, at.y), kind, h, changes_sign, multiplicity};
}

}  // namespace

std::vector<CriticalPoint> critical_points(const BelochParams& pr) {
  if (pr.alpha != 2.0) throw Error(ErrorCode::InvalidArgument, "surface census needs alpha = 2");
  const Point P = pr.singular_point();
  const double size = 1.0 + std::abs(pr.p) + std::abs(pr.q);

  struct Candidate {
    Point at;
    int multiplicity;
  };
  std::vector<Candidate> found;
  int p_multiplicity = 0;

  auto add = [&](Point at, int mult) {
    if (distance(at, P) <= 1e-6 * size) {
      p_multiplicity += mult;
      return;
    }
    for (Candidate& c : found) {
      if (distance(c.at, at) <= 1e-6 * size) {
        c.multiplicity += mult;
        return;
      }
    }
    found.push_back({at, mult});
  };

  const Poly quartic = critical_quartic(pr);
  for (const Root& root : real_roots(quartic)) {
    const double y = root.value;
    if (std::abs(y) <= 1e-9 * size) continue;  // the y = 0 branch is handled below
    add(polish(pr, {pr.p - 2.0 * (pr.q - y) / y, y}), root.multiplicity);
  }
  if (pr.q == 0.0) {
    // F_y = 2y(p - x) at q = 0, so y = 0 is critical wherever (p - x)(p + 3x) = 0.
    add({pr.p, 0.0}, 1);
    add({-pr.p / 3.0, 0.0}, 1);
  }

  std::vector<CriticalPoint> out;
  out.push_back(make_point(pr, P, std::max(p_multiplicity, 1)));
  for (const Candidate& c : found) out.push_back(make_point(pr, c.at, c.multiplicity));
  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    return a.location.y != b.location.y ? a.location.y < b.location.y : a.location.x < b.location.x;
  });
  return out;
}

ConjectureVerdict conjecture_verdict(const BelochParams& pr) {
  const auto census = critical_points(pr);
  const double d = pr.discriminant();
  const double band = kClassifyEps * pr.scale();

  ConjectureVerdict v{};
  v.sign_class = d < -band ? -1 : (d > band ? 1 : 0);
  v.distinct_points = static_cast<int>(census.size());

  bool extremum_at_p = false;
  bool saddle_at_p = false;
  int saddle_like = 0;
  for (const CriticalPoint& c : census) {
    v.points_with_multiplicity += c.multiplicity;
    const bool at_p = c.location == pr.singular_point();
    if (at_p) v.kind_at_p = c.kind;
    switch (c.kind) {
      case CriticalKind::LocalMin: ++v.local_min; break;
      case CriticalKind::LocalMax: ++v.local_max; break;
      case CriticalKind::Saddle: ++v.saddles; break;
      case CriticalKind::DegenerateCritical: ++v.degenerate; break;
    }
    const bool extremum = c.kind == CriticalKind::LocalMin || c.kind == CriticalKind::LocalMax;
    const bool saddle_type = c.kind == CriticalKind::Saddle || (c.kind == CriticalKind::DegenerateCritical && c.changes_sign);
    if (saddle_type) ++saddle_like;
    if (at_p && extremum) extremum_at_p = true;
    if (at_p && saddle_type) saddle_at_p = true;
  }

  v.observed_extremum = v.local_min > 0 ? (v.local_max > 0 ? "mixed" : "LocalMin") : (v.local_max > 0 ? "LocalMax" : "none");

  switch (v.sign_class) {
    case -1:
      v.matches_conjecture = v.extrema() == 1 && extremum_at_p && saddle_like == 1 && v.distinct_points == 2;
      break;
    case 0:
      v.matches_conjecture = v.extrema() == 0 && saddle_at_p && saddle_like == 1 && v.distinct_points == 1;
      break;
    default:
      v.matches_conjecture = v.extrema() == 1 && !extremum_at_p && saddle_at_p && saddle_like == 1 &&
                             v.distinct_points == 2;
      break;
  }

  if (v.local_min > 0) {
    v.notes.push_back(
        "the extremum is a local minimum (F_xx > 0 with positive Hessian determinant); "
        "a local maximum was conjectured");
  }
  if (v.kind_at_p == CriticalKind::DegenerateCritical) {
    v.notes.push_back(
        "P has zero Hessian determinant; F takes both signs near P, so it is counted as the saddle point");
  }
  return v;
}

}  // namespace beloch
