#pragma once

#include <optional>
#include <span>
#include <vector>

namespace beloch {

/// Real univariate polynomial of degree at most 6, coefficients in ascending
/// degree. Leading coefficients below 1e-12 * max|coeff| are trimmed on
/// construction; `leading_trimmed()` records that this happened.
class Poly {
 public:
  static constexpr int kMaxDegree = 6;

  Poly() = default;
  /// Throws InvalidArgument for non-finite coefficients or degree > 6 after trimming.
  explicit Poly(std::vector<double> ascending);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const double> coefficients() const { return coeffs_; }
  double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
  bool leading_trimmed() const { return leading_trimmed_; }

  double operator()(double x) const;
  Poly derivative() const;

  /// sum |c_i| |x|^i: the natural size of rounding error when evaluating at x.
  double scale_at(double x) const;

 private:
  std::vector<double> coeffs_;
  bool leading_trimmed_{false};
};

struct Root {
  double value;
  int multiplicity;
};

struct Interval {
  double lo;
  double hi;
};

/// Distinct real roots (closed interval filter when given), ascending, with
/// multiplicities. Throws ZeroPolynomial.
std::vector<Root> real_roots(const Poly& p, std::optional<Interval> interval = std::nullopt);

/// Number of distinct real roots from sign variations of the Sturm chain.
/// Throws ZeroPolynomial.
int count_distinct_real_roots(const Poly& p);

/// Product of two polynomials (result must still fit in degree 6).
Poly multiply(const Poly& a, const Poly& b);
Poly add(const Poly& a, const Poly& b);
Poly scale(const Poly& a, double s);

}  // namespace beloch
