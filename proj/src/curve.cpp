#include "beloch/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "beloch/error.hpp"

namespace beloch {

BelochParams BelochParams::make(double p, double q, double alpha) {
  if (!std::isfinite(p) || !std::isfinite(q) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidArgument, "curve parameters must be finite");
  }
  if (alpha == 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonzero");
  return {p, q, alpha};
}

double BelochParams::scale() const { return 1.0 + std::abs(p) + q * q; }

std::string_view shape_name(ShapeClass shape) {
  switch (shape) {
    case ShapeClass::IsolatedPoint: return "IsolatedPoint";
    case ShapeClass::Cusp: return "Cusp";
    case ShapeClass::Node: return "Node";
    case ShapeClass::Degenerate: return "Degenerate";
  }
  return "Degenerate";
}

double Gradient::norm() const { return std::hypot(fx, fy); }

double f_eval(const BelochParams& pr, double x, double y) {
  const double dq = pr.q - y;
  const double dp = pr.p - x;
  return pr.alpha * dq * dq - (pr.q + y) * dq * dp - dp * dp * (pr.p + x);
}

Gradient gradient(const BelochParams& pr, double x, double y) {
  const double dq = pr.q - y;
  const double dp = pr.p - x;
  return {(pr.q + y) * dq + dp * (pr.p + 3.0 * x), -2.0 * pr.alpha * dq + 2.0 * y * dp};
}

SecondPartials second_partials(const BelochParams& pr, double x, double y) {
  return {2.0 * pr.p - 6.0 * x, -2.0 * y, 2.0 * pr.alpha + 2.0 * pr.p - 2.0 * x};
}

double hessian_at_singular(const BelochParams& pr) { return -4.0 * (2.0 * pr.alpha * pr.p + pr.q * pr.q); }

Line fold_for(const BelochParams& pr, double r) {
  return Line::from_coefficients(pr.alpha, 2.0 * r, -2.0 * r * r);
}

OrbitPoint orbit(const BelochParams& pr, double r) {
  const double p = pr.p;
  const double q = pr.q;
  const double r2 = r * r;
  if (pr.alpha == 2.0) {
    const double den = r2 + 1.0;
    return {r, ((2.0 + p) * r2 - 2.0 * q * r - p) / den, (2.0 * r2 * r - q * r2 - 2.0 * p * r + q) / den};
  }
  const double a = pr.alpha;
  const double den = a * a + 4.0 * r2;
  return {r, (4.0 * (p + a) * r2 - 4.0 * a * q * r - a * a * p) / den,
          (8.0 * r2 * r - 4.0 * q * r2 - 4.0 * a * p * r + a * a * q) / den};
}

std::vector<double> special_parameters(const BelochParams& pr) {
  const double d = pr.discriminant();
  const double band = kClassifyEps * pr.scale();
  if (d < -band) return {};
  if (d <= band) return {0.5 * pr.q};
  const double root = std::sqrt(d);
  // Roots of r^2 - q r - alpha p/2, in the cancellation-free form.
  const double big = 0.5 * (pr.q + std::copysign(root, pr.q == 0.0 ? 1.0 : pr.q));
  const double small = -0.5 * pr.alpha * pr.p / big;
  return {std::min(big, small), std::max(big, small)};
}

// --- local sampling oracle -------------------------------------------------

SignPattern sign_pattern_on_circle(const PlaneFunction& f, const Point& center, double radius, int samples) {
  std::vector<int> signs;
  std::vector<double> angles;
  signs.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double th = 2.0 * std::numbers::pi * k / samples;
    const double v = f(center.x + radius * std::cos(th), center.y + radius * std::sin(th));
    if (v == 0.0) continue;
    signs.push_back(v > 0.0 ? 1 : -1);
    angles.push_back(th);
  }
  SignPattern out;
  const std::size_t n = signs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (signs[i] != signs[j]) {
      ++out.flips;
      double mid = j == 0 ? 0.5 * (angles[i] + angles[j] + 2.0 * std::numbers::pi) : 0.5 * (angles[i] + angles[j]);
      if (mid >= 2.0 * std::numbers::pi) mid -= 2.0 * std::numbers::pi;
      out.flip_angles.push_back(mid);
    }
  }
  return out;
}

ShapeClass shape_from_pattern(const SignPattern& pattern) {
  switch (pattern.flips) {
    case 0: return ShapeClass::IsolatedPoint;
    case 4: return ShapeClass::Node;
    case 2: {
      double gap = std::abs(pattern.flip_angles[0] - pattern.flip_angles[1]);
      gap = std::min(gap, 2.0 * std::numbers::pi - gap);
      return gap < 0.5 * std::numbers::pi ? ShapeClass::Cusp : ShapeClass::Degenerate;
    }
    default: return ShapeClass::Degenerate;
  }
}

ShapeClass sample_local_shape(const PlaneFunction& f, const Point& center, const std::vector<double>& radii) {
  std::optional<ShapeClass> agreed;
  for (double rho : radii) {
    const ShapeClass s = shape_from_pattern(sign_pattern_on_circle(f, center, rho));
    if (agreed && *agreed != s) return ShapeClass::Degenerate;
    agreed = s;
  }
  return agreed.value_or(ShapeClass::Degenerate);
}

ShapeClass classify(const BelochParams& pr) {
  const double d = pr.discriminant();
  const double band = kClassifyEps * pr.scale();
  if (d < -band) return ShapeClass::IsolatedPoint;
  if (d > band) return ShapeClass::Node;
  const auto f = [&pr](double x, double y) { return f_eval(pr, x, y); };
  const ShapeClass sampled = sample_local_shape(f, pr.singular_point(), {1e-3, 1e-2});
  return sampled == ShapeClass::Cusp ? ShapeClass::Cusp : ShapeClass::Degenerate;
}

// --- numerical scans -------------------------------------------------------

namespace {

constexpr int kNewtonMaxIter = 50;
constexpr double kGradTol = 1e-11;
constexpr double kMergeRadius = 1e-6;

struct NewtonOutcome {
  Point at;
  bool converged;
};

NewtonOutcome damped_newton(const BelochParams& pr, Point x) {
  const double s = 1.0 + std::abs(pr.p) + std::abs(pr.q) + std::abs(pr.alpha);
  const double tol = kGradTol * s * s;
  Gradient g = gradient(pr, x.x, x.y);
  for (int it = 0; it < kNewtonMaxIter; ++it) {
    const SecondPartials h = second_partials(pr, x.x, x.y);
    const double hn = std::abs(h.fxx) + std::abs(h.fyy) + 2.0 * std::abs(h.fxy);
    Point step;
    const double det = h.det();
    if (std::abs(det) > 1e-13 * (1.0 + hn * hn)) {
      step = {-(h.fyy * g.fx - h.fxy * g.fy) / det, -(-h.fxy * g.fx + h.fxx * g.fy) / det};
    } else {
      // Levenberg-Marquardt step on a (nearly) singular Hessian.
      const double mu = 1e-8 * (1.0 + hn * hn);
      const double a11 = h.fxx * h.fxx + h.fxy * h.fxy + mu;
      const double a12 = h.fxx * h.fxy + h.fxy * h.fyy;
      const double a22 = h.fxy * h.fxy + h.fyy * h.fyy + mu;
      const double b1 = -(h.fxx * g.fx + h.fxy * g.fy);
      const double b2 = -(h.fxy * g.fx + h.fyy * g.fy);
      const double dd = a11 * a22 - a12 * a12;
      step = {(a22 * b1 - a12 * b2) / dd, (a11 * b2 - a12 * b1) / dd};
    }
    double lambda = 1.0;
    Point trial = x + step;
    Gradient gt = gradient(pr, trial.x, trial.y);
    for (int k = 0; k < 20 && gt.norm() >= g.norm() && g.norm() > 0.0; ++k) {
      lambda *= 0.5;
      trial = x + step * lambda;
      gt = gradient(pr, trial.x, trial.y);
    }
    const double moved = (step * lambda).norm();
    if (!trial.finite()) return {x, false};
    x = trial;
    g = gt;
    if (g.norm() <= tol && moved <= 1e-10 * (1.0 + x.norm())) return {x, true};
    if (g.norm() == 0.0) return {x, true};
  }
  return {x, g.norm() <= tol};
}

void sort_points(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
}

}  // namespace

ScanResult stationary_points(const BelochParams& pr, const Rect& window, int grid_n) {
  if (grid_n < 16) throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 16");
  if (window.empty()) throw Error(ErrorCode::InvalidArgument, "empty scan window");
  ScanResult out;
  std::vector<std::pair<Point, double>> found;  // point, gradient norm
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const Point seed{window.x0 + (i + 0.5) * window.width() / grid_n,
                       window.y0 + (j + 0.5) * window.height() / grid_n};
      const NewtonOutcome res = damped_newton(pr, seed);
      if (!res.converged) {
        ++out.non_converged;
        continue;
      }
      if (!window.contains(res.at)) continue;
      const double gn = gradient(pr, res.at.x, res.at.y).norm();
      bool merged = false;
      for (auto& [pt, best] : found) {
        if (distance(pt, res.at) <= kMergeRadius) {
          if (gn < best) {
            pt = res.at;
            best = gn;
          }
          merged = true;
          break;
        }
      }
      if (!merged) found.emplace_back(res.at, gn);
    }
  }
  for (const auto& entry : found) out.points.push_back(entry.first);
  sort_points(out.points);
  return out;
}

ScanResult singular_scan(const BelochParams& pr, const Rect& window, int grid_n) {
  ScanResult all = stationary_points(pr, window, grid_n);
  const double s = 1.0 + std::abs(pr.p) + std::abs(pr.q) + std::abs(pr.alpha);
  // At a converged stationary point F is known to rounding level; a looser
  // filter would admit the nearby saddle that appears when the node is close
  // to becoming a cusp.
  const double tol = 1e-12 * s * s * s;
  std::erase_if(all.points, [&](const Point& pt) { return std::abs(f_eval(pr, pt.x, pt.y)) > tol; });
  return all;
}

// --- sections and segment relation ----------------------------------------

SectionPolys section_polys(const BelochParams& pr) {
  if (pr.alpha != 2.0) throw Error(ErrorCode::InvalidArgument, "section polynomials need alpha = 2");
  const double p = pr.p;
  const double q = pr.q;
  const double p2 = p * p;
  const double q2 = q * q;
  Poly vertical({1.0 + p - p2 - p2 * p + q2 - p * q2, -4.0 * q, 3.0 + p});
  Poly horizontal({-p2 * p + 2.0 * q2 - p * q2, p2 + q2, p, -1.0});
  return {std::move(vertical), std::move(horizontal)};
}

std::string_view relation_name(SegmentRelation rel) {
  switch (rel) {
    case SegmentRelation::Coincide: return "Coincide";
    case SegmentRelation::Intersect: return "Intersect";
    case SegmentRelation::Disjoint: return "Disjoint";
  }
  return "Disjoint";
}

RelationVotes segment_relation_votes(const BelochParams& pr, double r) {
  const Point a = pr.anchor();
  const Point a_img = pr.anchor_image(r);
  const Point pt = pr.singular_point();
  const OrbitPoint o = orbit(pr, r);
  const Point p_img = o.point();

  RelationVotes v{};
  if (distance(pt, p_img) <= kGeomEps) {
    v.by_segments = SegmentRelation::Coincide;
  } else {
    v.by_segments = segments_intersect({a, pt}, {a_img, p_img}) ? SegmentRelation::Intersect
                                                                 : SegmentRelation::Disjoint;
  }

  switch (position_wrt_circle(a_img, {pt, distance(a, pt)})) {
    case CirclePosition::Inside: v.by_circle = SegmentRelation::Intersect; break;
    case CirclePosition::On: v.by_circle = SegmentRelation::Coincide; break;
    case CirclePosition::Outside: v.by_circle = SegmentRelation::Disjoint; break;
  }

  // A A' and P P' are parallel; for alpha > 0 the segments meet iff P' lies
  // on the opposite side of P from the direction A -> A'.
  const double lead = (pr.alpha > 0.0 ? 1.0 : -1.0) * (pr.p - o.s);
  if (std::abs(lead) <= kGeomEps * (1.0 + std::abs(pr.p))) {
    v.by_abscissa = SegmentRelation::Coincide;
  } else {
    v.by_abscissa = lead > 0.0 ? SegmentRelation::Intersect : SegmentRelation::Disjoint;
  }
  return v;
}

SegmentRelation segment_relation(const BelochParams& pr, double r) {
  const RelationVotes v = segment_relation_votes(pr, r);
  if (v.by_segments == v.by_circle && v.by_circle == v.by_abscissa) return v.by_segments;

  // Near P' = P the tolerance bands of the three tests differ; a split vote
  // involving Coincide is accepted there.
  const OrbitPoint o = orbit(pr, r);
  const double near = 1e-6 * (1.0 + std::abs(pr.p) + std::abs(pr.q));
  const bool any_coincide = v.by_segments == SegmentRelation::Coincide ||
                            v.by_circle == SegmentRelation::Coincide ||
                            v.by_abscissa == SegmentRelation::Coincide;
  if (any_coincide && distance(o.point(), pr.singular_point()) <= near) return SegmentRelation::Coincide;

  std::ostringstream msg;
  msg.precision(17);
  msg << "p=" << pr.p << " q=" << pr.q << " alpha=" << pr.alpha << " r=" << r
      << " segments=" << relation_name(v.by_segments) << " circle=" << relation_name(v.by_circle)
      << " abscissa=" << relation_name(v.by_abscissa);
  throw Error(ErrorCode::OracleDisagreement, msg.str());
}

}  // namespace beloch
