#include "liedual/polynomial.hpp"

#include <cmath>

#include "liedual/error.hpp"

namespace liedual {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> c = coeffs_;
  Rational inv = 1 / leading();
  for (auto& x : c) x *= inv;
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    Rational a = abs(c);
    if (k == 0) {
      out += liedual::to_string(a);
      continue;
    }
    if (a != 1) out += a.get_den() == 1 ? liedual::to_string(a) : "(" + liedual::to_string(a) + ")";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidData, "polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - db)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k - db + j)] -= f * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& a) {
  if (a.degree() <= 0) return a.monic();
  Polynomial g = gcd(a, a.derivative());
  return divmod(a, g).first.monic();
}

Polynomial characteristic_polynomial(const Matrix& a) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    Matrix am = a * m;
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  Polynomial d = p.derivative();
  while (!d.is_zero()) {
    chain.push_back(d);
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    d = Polynomial{} - r;
  }
  return chain;
}

namespace {

std::size_t sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::size_t count_real_roots(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b) {
  if (chain.empty()) return 0;
  const std::size_t va = sign_variations(chain, a);
  const std::size_t vb = sign_variations(chain, b);
  return va > vb ? va - vb : 0;
}

Rational cauchy_root_bound(const Polynomial& p) {
  Rational m;
  if (p.degree() <= 0) return 1;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coefficients()[static_cast<std::size_t>(k)] / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Polynomial& p, const Rational& width) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) return out;
  Polynomial q = squarefree_part(p);
  auto chain = sturm_chain(q);
  Rational bound = cauchy_root_bound(q);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    std::size_t n = count_real_roots(chain, lo, hi);
    if (n == 0) continue;
    if (n == 1 && hi - lo <= width) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    // Push the upper half first so roots come out in increasing order.
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  return out;
}

Rational simplest_rational_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_rational_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational flr(fl);
  return flr + 1 / simplest_rational_between(1 / (hi - flr), 1 / (lo - flr));
}

std::vector<std::pair<Rational, std::size_t>> rational_roots(const Polynomial& p) {
  std::vector<std::pair<Rational, std::size_t>> out;
  if (p.degree() <= 0) return out;
  Polynomial q = squarefree_part(p);

  // Clear denominators: any rational root a/b of the integer polynomial has
  // b dividing its leading coefficient L, so two distinct candidates are at
  // least 1/L^2 apart.
  Integer lcm_den = 1;
  for (const auto& c : q.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  Rational lead = abs(q.leading() * lcm_den);
  Rational resolution = 1 / (lead * lead * 4);

  auto chain = sturm_chain(q);
  for (auto [lo, hi] : isolate_real_roots(q, Rational(1))) {
    while (true) {
      if (sgn(q(hi)) == 0) {
        out.emplace_back(hi, 0);
        break;
      }
      Rational s = simplest_rational_between(lo, hi);
      if (s > lo && sgn(q(s)) == 0) {
        out.emplace_back(s, 0);
        break;
      }
      if (hi - lo < resolution) break;
      Rational mid = (lo + hi) / 2;
      if (count_real_roots(chain, lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
  }

  for (auto& [r, mult] : out) {
    Polynomial lin({-r, 1});
    Polynomial rest = p;
    while (true) {
      auto [quot, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      ++mult;
      rest = std::move(quot);
    }
  }
  return out;
}

}  // namespace liedual
