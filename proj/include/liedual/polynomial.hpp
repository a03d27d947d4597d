#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liedual/matrix.hpp"

namespace liedual {

/// Univariate polynomial over Q; coefficients stored lowest degree first
/// with no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  bool operator==(const Polynomial&) const = default;

  /// Text form in the variable `var`, highest degree first, e.g. "t^4 + 10t^2 + 9".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// Quotient and remainder of a by a nonzero b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);
/// a / gcd(a, a').
Polynomial squarefree_part(const Polynomial& a);

/// det(t I - m), by the Faddeev-LeVerrier recursion.
Polynomial characteristic_polynomial(const Matrix& m);

/// Standard Sturm chain p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_chain(const Polynomial& p);
/// Number of distinct real roots of p in the half-open interval (a, b].
std::size_t count_real_roots(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b);

/// A positive rational bound exceeding the absolute value of every root.
Rational cauchy_root_bound(const Polynomial& p);

/// Real roots of p, each isolated in a disjoint interval (lo, hi] of width at
/// most `width`. Intervals are returned in increasing order.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Polynomial& p, const Rational& width);

/// The rational roots of p with multiplicities, increasing. Roots are found by
/// isolation and simplest-rational search, and every returned root is checked
/// by exact evaluation.
std::vector<std::pair<Rational, std::size_t>> rational_roots(const Polynomial& p);

/// The simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_rational_between(Rational lo, Rational hi);

}  // namespace liedual
