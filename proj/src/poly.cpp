#include "beloch/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "beloch/error.hpp"

namespace beloch {

namespace {

using Coeffs = std::vector<double>;

// Relative size below which a Sturm remainder coefficient counts as zero.
constexpr double kChainTol = 1e-10;
// Multiple of machine epsilon applied to the carried error estimate.
constexpr double kChainEps = 1e3 * std::numeric_limits<double>::epsilon();
constexpr double kLeadTrim = 1e-12;
constexpr double kRefineWidth = 1e-12;

double max_abs(const Coeffs& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

double horner(const Coeffs& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void trim_exact(Coeffs& c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
}

void normalize_max(Coeffs& c) {
  const double m = max_abs(c);
  if (m > 0.0) {
    for (double& v : c) v /= m;
  }
}

Coeffs derivative_of(const Coeffs& c) {
  if (c.size() <= 1) return {};
  Coeffs d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
  return d;
}

struct Division {
  Coeffs quotient;
  Coeffs remainder;
};

Division divide(const Coeffs& num, const Coeffs& den) {
  Coeffs r = num;
  const std::size_t dn = den.size();
  if (r.size() < dn) return {{}, r};
  Coeffs q(r.size() - dn + 1, 0.0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const double f = r[k + dn - 1] / den.back();
    q[k] = f;
    for (std::size_t j = 0; j < dn; ++j) r[k + j] -= f * den[j];
    r[k + dn - 1] = 0.0;
  }
  r.resize(dn - 1);
  return {q, r};
}

// Sturm chain of c (which must have degree >= 1). Each member is scaled to
// unit max-norm; positive scaling leaves sign variations unchanged. A
// remainder is treated as zero when it is at the level of the rounding
// error carried into it. That error grows each time a small remainder is
// rescaled, so the estimate tracks the accumulated amplification.
std::vector<Coeffs> sturm_chain(const Coeffs& c) {
  std::vector<Coeffs> chain;
  Coeffs p0 = c;
  normalize_max(p0);
  Coeffs p1 = derivative_of(p0);
  normalize_max(p1);
  chain.push_back(p0);
  chain.push_back(p1);
  double amplification = 1.0;
  while (chain.back().size() > 1) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    Division dv = divide(a, b);
    const double carried = amplification * (1.0 + max_abs(dv.quotient));
    const double noise = std::max(kChainTol, kChainEps * carried);
    Coeffs r = dv.remainder;
    while (!r.empty() && std::abs(r.back()) <= noise) r.pop_back();
    if (r.empty()) break;
    amplification = carried / max_abs(r);
    for (double& v : r) v = -v;
    normalize_max(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

int variations_at(const std::vector<Coeffs>& chain, double x) {
  int count = 0;
  int prev = 0;
  for (const auto& c : chain) {
    const int s = sign_of(horner(c, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int variations_at_infinity(const std::vector<Coeffs>& chain, bool positive) {
  int count = 0;
  int prev = 0;
  for (const auto& c : chain) {
    int s = sign_of(c.back());
    if (!positive && (c.size() - 1) % 2 == 1) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

double cauchy_bound(const Coeffs& c) {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, std::abs(c[i] / c.back()));
  return 1.0 + m;
}

void check_nonzero(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "all coefficients vanish");
}

Coeffs to_coeffs(const Poly& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

// Roots of a square-free polynomial inside (lo, hi], isolated by Sturm
// counts and refined by bisection on the same counts.
void isolate(const std::vector<Coeffs>& chain, double lo, double hi, int v_lo, int v_hi,
             std::vector<double>& out) {
  const int n = v_lo - v_hi;
  if (n <= 0) return;
  const double mid = 0.5 * (lo + hi);
  const bool can_split = mid > lo && mid < hi;
  if (n == 1) {
    while (hi - lo > kRefineWidth) {
      const double m = 0.5 * (lo + hi);
      if (!(m > lo && m < hi)) break;
      const int v_m = variations_at(chain, m);
      if (v_lo - v_m >= 1) {
        hi = m;
        v_hi = v_m;
      } else {
        lo = m;
        v_lo = v_m;
      }
    }
    out.push_back(0.5 * (lo + hi));
    return;
  }
  if (!can_split) {
    // Roots closer than the representable spacing: report them once.
    out.push_back(mid);
    return;
  }
  const int v_mid = variations_at(chain, mid);
  isolate(chain, lo, mid, v_lo, v_mid, out);
  isolate(chain, mid, hi, v_mid, v_hi, out);
}

}  // namespace

Poly::Poly(std::vector<double> ascending) : coeffs_(std::move(ascending)) {
  for (double v : coeffs_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite polynomial coefficient");
  }
  trim_exact(coeffs_);
  const double m = max_abs(coeffs_);
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) < kLeadTrim * m) {
    coeffs_.pop_back();
    leading_trimmed_ = true;
    trim_exact(coeffs_);
  }
  if (degree() > kMaxDegree) {
    throw Error(ErrorCode::InvalidArgument, "polynomial degree " + std::to_string(degree()) + " exceeds 6");
  }
}

double Poly::operator()(double x) const { return horner(coeffs_, x); }

Poly Poly::derivative() const { return Poly(derivative_of(coeffs_)); }

double Poly::scale_at(double x) const {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

int count_distinct_real_roots(const Poly& p) {
  check_nonzero(p);
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(to_coeffs(p));
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::vector<Root> real_roots(const Poly& p, std::optional<Interval> interval) {
  check_nonzero(p);
  if (p.degree() == 0) return {};

  const Coeffs c = to_coeffs(p);
  const auto chain = sturm_chain(c);
  const Coeffs& gcd = chain.back();

  Coeffs squarefree = c;
  if (gcd.size() > 1) {
    squarefree = divide(c, gcd).quotient;
    normalize_max(squarefree);
  }
  const auto sf_chain = sturm_chain(squarefree);

  const double bound = cauchy_bound(c) * (1.0 + 1e-9) + 1e-9;
  std::vector<double> values;
  isolate(sf_chain, -bound, bound, variations_at(sf_chain, -bound), variations_at(sf_chain, bound), values);
  std::sort(values.begin(), values.end());

  // Bisection stops at a 1e-12 bracket; Newton on the square-free part
  // (every root simple there) recovers the last digits.
  const Poly sf(squarefree);
  const Poly dsf = sf.derivative();
  for (double& x : values) {
    for (int it = 0; it < 4; ++it) {
      const double fx = sf(x);
      const double dfx = dsf(x);
      if (fx == 0.0 || dfx == 0.0) break;
      const double nx = x - fx / dfx;
      if (!(std::abs(nx - x) <= 1e-9 * (1.0 + std::abs(x))) || !(std::abs(sf(nx)) < std::abs(fx))) break;
      x = nx;
    }
  }

  // Roots of gcd(p, p') carry the excess multiplicity.
  std::vector<Root> gcd_roots;
  if (gcd.size() > 1) gcd_roots = real_roots(Poly(gcd));

  std::vector<Root> out;
  out.reserve(values.size());
  for (double x : values) {
    int mult = 1;
    for (const Root& g : gcd_roots) {
      if (std::abs(g.value - x) <= 1e-6 * (1.0 + std::abs(x))) {
        mult += g.multiplicity;
        break;
      }
    }
    if (!out.empty() && x <= out.back().value) continue;
    out.push_back({x, mult});
  }
  if (interval) {
    std::erase_if(out, [&](const Root& r) { return r.value < interval->lo || r.value > interval->hi; });
  }
  return out;
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  Coeffs out(ca.size() + cb.size() - 1, 0.0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    for (std::size_t j = 0; j < cb.size(); ++j) out[i + j] += ca[i] * cb[j];
  }
  return Poly(std::move(out));
}

Poly add(const Poly& a, const Poly& b) {
  Coeffs out(std::max(a.coefficients().size(), b.coefficients().size()), 0.0);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) out[i] += a.coefficients()[i];
  for (std::size_t i = 0; i < b.coefficients().size(); ++i) out[i] += b.coefficients()[i];
  return Poly(std::move(out));
}

Poly scale(const Poly& a, double s) {
  Coeffs out(a.coefficients().begin(), a.coefficients().end());
  for (double& v : out) v *= s;
  return Poly(std::move(out));
}

}  // namespace beloch
