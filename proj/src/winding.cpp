#include "beloch/winding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "beloch/error.hpp"
#include "beloch/poly.hpp"

namespace beloch {

namespace {

constexpr int kMaxRounds = 20;
constexpr double kMaxStep = 0.5 * std::numbers::pi;

double angle_step(const Point& a, const Point& b, const Point& c) {
  const Point u = a - c;
  const Point v = b - c;
  return std::atan2(cross(u, v), dot(u, v));
}

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, a);
  const double u = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return distance(p, a + d * u);
}

struct Sampled {
  std::vector<OrbitPoint> pts;
  double min_distance;
  int rounds;
  bool settled;
};

double polyline_min_distance(const std::vector<OrbitPoint>& pts, const Point& c) {
  double m = INFINITY;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::size_t j = (i + 1) % pts.size();
    m = std::min(m, point_segment_distance(c, pts[i].point(), pts[j].point()));
  }
  return m;
}

// Bisects parameter intervals whose angular step around `c` is at least
// pi/2 until none is left, the loop is found to touch `c`, or the round
// limit is hit.
Sampled refine_around(const ClosedLoop& loop, const Point& c) {
  Sampled out{loop.samples, polyline_min_distance(loop.samples, c), 0, false};
  for (int round = 0;; ++round) {
    out.rounds = round;
    out.min_distance = polyline_min_distance(out.pts, c);
    if (out.min_distance <= kGeomEps) return out;

    std::vector<OrbitPoint> next;
    next.reserve(out.pts.size() * 2);
    bool refined = false;
    for (std::size_t i = 0; i + 1 < out.pts.size(); ++i) {
      const OrbitPoint& a = out.pts[i];
      const OrbitPoint& b = out.pts[i + 1];
      next.push_back(a);
      if (std::abs(angle_step(a.point(), b.point(), c)) >= kMaxStep) {
        const double rm = 0.5 * (a.r + b.r);
        if (rm > a.r && rm < b.r) {
          const Point m = loop.curve(rm);
          next.push_back({rm, m.x, m.y});
          refined = true;
        }
      }
    }
    next.push_back(out.pts.back());
    if (!refined) {
      out.settled = true;
      return out;
    }
    if (round == kMaxRounds) return out;
    out.pts = std::move(next);
  }
}

}  // namespace

ClosedLoop ClosedLoop::from_curve(PlaneCurve curve, double r_lo, double r_hi, int n) {
  if (n < 3 || !(r_hi > r_lo)) throw Error(ErrorCode::InvalidArgument, "loop needs n >= 3 and r_lo < r_hi");
  ClosedLoop loop{std::move(curve), r_lo, r_hi, {}, false};
  loop.samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double r = i == n - 1 ? r_hi : r_lo + (r_hi - r_lo) * i / (n - 1);
    const Point pt = loop.curve(r);
    loop.samples.push_back({r, pt.x, pt.y});
  }
  loop.closed = distance(loop.samples.front().point(), loop.samples.back().point()) <= 1e-8;
  return loop;
}

std::pair<double, double> loop_range(const BelochParams& pr) {
  if (pr.discriminant() <= kClassifyEps * pr.scale()) {
    throw Error(ErrorCode::NotANode, "the orbit has no closed loop unless 2*alpha*p + q^2 > 0");
  }
  const auto roots = special_parameters(pr);
  return {roots.front(), roots.back()};
}

ClosedLoop beloch_loop(const BelochParams& pr, int base_samples) {
  const auto [lo, hi] = loop_range(pr);
  return ClosedLoop::from_curve([pr](double r) { return orbit(pr, r).point(); }, lo, hi, base_samples);
}

WindingResult winding_number(const ClosedLoop& loop, const Point& center) {
  if (!loop.closed) throw Error(ErrorCode::InvalidArgument, "winding number of an open loop");
  const Sampled s = refine_around(loop, center);
  if (s.min_distance <= kGeomEps) return {std::nullopt, s.min_distance, s.rounds};
  if (!s.settled) {
    throw Error(ErrorCode::RefinementLimit, "angle steps still exceed pi/2 after 20 rounds");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < s.pts.size(); ++i) {
    const std::size_t j = (i + 1) % s.pts.size();
    total += angle_step(s.pts[i].point(), s.pts[j].point(), center);
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= 0.1) {
    throw Error(ErrorCode::RefinementLimit, "accumulated angle is not close to a whole number of turns");
  }
  return {static_cast<int>(rounded), s.min_distance, s.rounds};
}

RayCrossings axis_ray_crossings(const ClosedLoop& loop, const Point& center) {
  if (!loop.closed) throw Error(ErrorCode::InvalidArgument, "ray crossings of an open loop");
  const Sampled s = refine_around(loop, center);
  if (s.min_distance <= kGeomEps) throw Error(ErrorCode::InvalidArgument, "center lies on the loop");

  struct Ray {
    bool horizontal;  // ray along x (offset measured in y)
    double direction;
    int* counter;
  };
  RayCrossings out;
  const Ray rays[] = {{true, 1.0, &out.east}, {false, 1.0, &out.north}, {true, -1.0, &out.west},
                      {false, -1.0, &out.south}};

  const double speed_h = 1e-6 * (loop.r_hi - loop.r_lo);
  for (const Ray& ray : rays) {
    auto offset = [&](const Point& pt) { return ray.horizontal ? pt.y - center.y : pt.x - center.x; };
    auto along = [&](const Point& pt) {
      return ray.direction * (ray.horizontal ? pt.x - center.x : pt.y - center.y);
    };
    for (std::size_t i = 0; i + 1 < s.pts.size(); ++i) {
      double lo = s.pts[i].r;
      double hi = s.pts[i + 1].r;
      const bool pos_lo = offset(s.pts[i].point()) > 0.0;
      const bool pos_hi = offset(s.pts[i + 1].point()) > 0.0;
      if (pos_lo == pos_hi) continue;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if ((offset(loop.curve(mid)) > 0.0) == pos_lo) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      const double rc = 0.5 * (lo + hi);
      const Point hit = loop.curve(rc);
      if (along(hit) <= 0.0) continue;
      ++*ray.counter;
      const Point ahead = loop.curve(rc + speed_h);
      const Point behind = loop.curve(rc - speed_h);
      const Point vel = ahead - behind;
      if (std::abs(offset(ahead) - offset(behind)) <= 1e-6 * vel.norm()) ++out.tangential;
    }
  }
  return out;
}

bool curve_through_anchor(const BelochParams& pr) {
  const Point a = pr.anchor();
  const double s = 1.0 + std::abs(pr.p) + std::abs(pr.q) + std::abs(pr.alpha);
  return std::abs(f_eval(pr, a.x, a.y)) <= 1e-9 * s * s * s;
}

LoopSections loop_axis_sections(const BelochParams& pr) {
  if (pr.alpha != 2.0) throw Error(ErrorCode::InvalidArgument, "loop sections need alpha = 2");
  const auto [lo, hi] = loop_range(pr);
  const Interval range{lo, hi};
  LoopSections out;
  // t(r) = 0  <=>  2r^3 - q r^2 - 2p r + q = 0
  for (const Root& root : real_roots(Poly({pr.q, -2.0 * pr.p, -pr.q, 2.0}), range)) {
    out.on_x_axis.push_back(orbit(pr, root.value).s);
  }
  // s(r) = -1  <=>  (3 + p) r^2 - 2q r + (1 - p) = 0
  for (const Root& root : real_roots(Poly({1.0 - pr.p, -2.0 * pr.q, 3.0 + pr.p}), range)) {
    out.on_anchor_x.push_back(orbit(pr, root.value).t);
  }
  std::sort(out.on_x_axis.begin(), out.on_x_axis.end());
  std::sort(out.on_anchor_x.begin(), out.on_anchor_x.end());
  return out;
}

}  // namespace beloch
