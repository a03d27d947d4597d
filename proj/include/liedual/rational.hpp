#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liedual {

// GMP keeps results of arithmetic canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// n/d reduced. The two-argument mpq_class constructor does not canonicalize,
/// so always build fractions through this.
Rational ratio(long n, long d);

/// Parses "p/q" or an integer, with optional sign. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" reduced, or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Coordinates of an element of a Lie algebra (column convention).
using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(const Vector& a, const Vector& b);

/// A row of coordinates in the canonical dual basis.
struct Covector {
  Vector coords;

  std::size_t size() const { return coords.size(); }
  Rational operator()(const Vector& x) const;
  bool operator==(const Covector&) const = default;
};

}  // namespace liedual
