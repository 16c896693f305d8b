#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "beloch/cubic_fold.hpp"
#include "beloch/error.hpp"
#include "beloch/general_cubic.hpp"
#include "beloch/oracles.hpp"
#include "beloch/parabola.hpp"
#include "beloch/poly.hpp"

namespace beloch {

namespace {

struct Suite {
  const char* name;
  // Returns an empty string on success, otherwise a reproducer.
  std::function<std::string(std::mt19937_64&)> trial;
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0, double d = 0, double e = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d, e);
  return buf;
}

int sign_of(double v, double band) { return v < -band ? -1 : (v > band ? 1 : 0); }

ShapeClass shape_for_sign(int s) {
  return s < 0 ? ShapeClass::IsolatedPoint : (s > 0 ? ShapeClass::Node : ShapeClass::Cusp);
}

std::string fold_trial(std::mt19937_64& rng) {
  const CubicEq eq{uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)};
  const std::string repro = fmt("solve --a %.17g --b %.17g --c %.17g", eq.a, eq.b, eq.c);
  const auto folds = solve_by_folding(eq);
  const auto expect = oracle::cardano_roots(eq.a, eq.b, eq.c);
  if (folds.size() != expect.size()) return repro + "  (root count)";
  for (std::size_t i = 0; i < folds.size(); ++i) {
    if (std::abs(folds[i].r - expect[i]) > 1e-9 * eq.scale()) return repro + "  (root value)";
    if (folds[i].residual_marked > 1e-9 * eq.scale()) return repro + "  (fold residual)";
  }
  return {};
}

std::string orbit_trial(std::mt19937_64& rng) {
  const auto pr = BelochParams::make(uniform(rng, -4, 4), uniform(rng, -4, 4));
  const double r = uniform(rng, -20, 20);
  const std::string repro = fmt("orbit --p %.17g --q %.17g --r %.17g", pr.p, pr.q, r);
  const OrbitPoint o = orbit(pr, r);
  const double s = 1.0 + std::abs(pr.p) + std::abs(pr.q);
  if (std::abs(f_eval(pr, o.s, o.t)) > 1e-9 * s * s * s) return repro + "  (off curve)";
  const Point ref = oracle::reflect_raw(pr, r);
  if (distance(ref, o.point()) > 1e-12 * (1.0 + ref.norm())) return repro + "  (reflection)";
  return {};
}

std::string relation_trial(std::mt19937_64& rng) {
  const auto pr = BelochParams::make(uniform(rng, -4, 4), uniform(rng, -4, 4));
  const double r = uniform(rng, -6, 6);
  try {
    segment_relation(pr, r);
  } catch (const Error& e) {
    return fmt("segment relation --p %.17g --q %.17g --r %.17g", pr.p, pr.q, r);
  }
  return {};
}

std::string shape_trial(std::mt19937_64& rng) {
  const auto pr = BelochParams::make(uniform(rng, -4, 4), uniform(rng, -4, 4));
  const std::string repro = fmt("analyze --p %.17g --q %.17g", pr.p, pr.q);
  // Around P the curve is the origin-singular cubic with (a0..a4) = (2, 1, 2q, 2p, 1).
  const GeneralCubic local{pr.alpha, 1.0, 2.0 * pr.q, 2.0 * pr.p, 1.0};
  const auto f = [&pr](double x, double y) { return f_eval(pr, x, y); };
  const ShapeClass sampled = sample_local_shape(f, pr.singular_point(), origin_sampling_radii(local));
  const ShapeClass cls = classify(pr);
  if (sampled != cls) return repro + "  (sampling vs classify)";
  if (cls != shape_for_sign(sign_of(pr.discriminant(), kClassifyEps * pr.scale()))) return repro + "  (sign)";
  const std::size_t expected = cls == ShapeClass::IsolatedPoint ? 0 : (cls == ShapeClass::Cusp ? 1 : 2);
  if (special_parameters(pr).size() != expected) return repro + "  (pass-through count)";
  for (double r : special_parameters(pr)) {
    if (distance(orbit(pr, r).point(), pr.singular_point()) > 1e-8 * pr.scale()) return repro + "  (pass-through)";
  }
  return {};
}

std::string parabola_trial(std::mt19937_64& rng) {
  const auto pr = BelochParams::make(uniform(rng, -5, 5), uniform(rng, -5, 5));
  const std::string repro = fmt("analyze --p %.17g --q %.17g", pr.p, pr.q);
  const auto fg = fg_intersection_count(pr);
  const int sign = sign_of(pr.discriminant(), kClassifyEps * pr.scale());
  const IntersectionClass expect =
      sign < 0 ? IntersectionClass::Zero : (sign == 0 ? IntersectionClass::One : IntersectionClass::TwoOrMore);
  if (fg.cls != expect) return repro + "  (F meets G class)";
  for (double r : fg.witnesses) {
    const OrbitPoint o = orbit(pr, r);
    if (std::abs(4.0 * o.s + o.t * o.t) > 1e-8 * (1.0 + o.t * o.t)) return repro + "  (witness)";
  }
  const double r = uniform(rng, -10, 10);
  if (coefficient_distance(fold_line(r), tangent_at(r)) > 1e-12) return fmt("tangent --r %.17g", r);
  return {};
}

std::string general_trial(std::mt19937_64& rng) {
  GeneralCubic c{uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5),
                 uniform(rng, 0.1, 5)};
  if (c.a1 < 0.0) c.a4 = -c.a4;
  if (c.a1 == 0.0 || c.a0 == 0.0) return {};
  const std::string repro =
      fmt("classify-general --coeffs %.17g,%.17g,%.17g,%.17g,%.17g", c.a0, c.a1, c.a2, c.a3, c.a4);
  const Normalization n = normalize(c);
  const OriginReport rep = classify_origin(c);
  const double size = 1.0 + std::abs(n.p) + n.q * n.q + std::abs(n.alpha * n.p);
  if (std::abs(rep.paper_value - (4.0 * n.p + n.q * n.q)) > 1e-12 * size) return repro + "  (paper identity)";
  if (std::abs(rep.corrected_value - (2.0 * n.alpha * n.p + n.q * n.q)) > 1e-12 * size) {
    return repro + "  (corrected identity)";
  }
  const int by_det = -sign_of(rep.hessian_det, kClassifyEps * (1.0 + 4.0 * std::abs(c.a0 * c.a3) + c.a2 * c.a2));
  if (shape_for_sign(by_det) != rep.shape && rep.shape != ShapeClass::Degenerate) return repro + "  (hessian)";
  if (rep.sampled_shape != rep.shape) return repro + "  (sampling)";
  const GeneralCubic back = reexpand(n, c.a1);
  const double scale = std::abs(c.a0) + std::abs(c.a1) + std::abs(c.a2) + std::abs(c.a3) + std::abs(c.a4);
  for (auto [x, y] : {std::pair{back.a0, c.a0}, {back.a2, c.a2}, {back.a3, c.a3}, {back.a4, c.a4}}) {
    if (std::abs(x - y) > 1e-12 * scale) return repro + "  (round trip)";
  }
  return {};
}

std::string poly_trial(std::mt19937_64& rng) {
  // Product of linear factors with well separated roots, one of them doubled.
  std::vector<double> roots;
  const int k = std::uniform_int_distribution<int>(1, 4)(rng);
  while (static_cast<int>(roots.size()) < k) {
    const double x = uniform(rng, -3, 3);
    bool ok = true;
    for (double y : roots) ok = ok && std::abs(x - y) >= 0.05;
    if (ok) roots.push_back(x);
  }
  Poly p({1.0});
  for (double x : roots) p = multiply(p, Poly({-x, 1.0}));
  p = multiply(p, Poly({-roots.front(), 1.0}));
  std::string repro = "poly with roots";
  for (double x : roots) repro += fmt(" %.17g", x);
  const auto got = real_roots(p);
  if (got.size() != roots.size()) return repro + "  (count)";
  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (std::abs(got[i].value - roots[i]) > 1e-6) return repro + "  (value)";
  }
  return {};
}

}  // namespace

bool run_verify(const VerifyOptions& options, std::ostream& out) {
  const Suite suites[] = {
      {"fold", fold_trial},         {"orbit", orbit_trial},     {"relation", relation_trial},
      {"shape", shape_trial},       {"parabola", parabola_trial}, {"general", general_trial},
      {"poly", poly_trial},
  };
  bool all_ok = true;
  std::uint64_t index = 0;
  for (const Suite& suite : suites) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(index++)};
    std::mt19937_64 rng(seq);
    int failures = 0;
    std::string first;
    for (int t = 0; t < options.trials; ++t) {
      std::string bad;
      try {
        bad = suite.trial(rng);
      } catch (const Error& e) {
        bad = std::string("trial ") + std::to_string(t) + " threw " + e.what();
      }
      if (!bad.empty()) {
        if (failures == 0) first = bad;
        ++failures;
      }
    }
    out << suite.name << ": " << options.trials << " trials, " << failures << " failures\n";
    if (failures > 0) {
      out << "  OracleDisagreement reproducer: " << first << "\n";
      all_ok = false;
    }
  }
  return all_ok;
}

}  // namespace beloch
