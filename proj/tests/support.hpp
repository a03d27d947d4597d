#pragma once

#include <random>

#include "liedual/catalog.hpp"
#include "liedual/classification.hpp"
#include "liedual/error.hpp"

namespace liedual::testing {

inline Rational random_rational(std::mt19937& rng, int max_num = 5, int max_den = 3) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  return ratio(num(rng), den(rng));
}

inline Rational random_positive(std::mt19937& rng, int max_num = 5, int max_den = 3) {
  std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
  return ratio(num(rng), den(rng));
}

inline Matrix random_antisymmetric(std::mt19937& rng, std::size_t n) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = random_rational(rng);
      a(j, i) = -a(i, j);
    }
  return a;
}

/// su2^k ⊕ abelian(m) with a compact invariant form and a skew derivation that
/// is inner on the semisimple part and B^{-1} A on the abelian part.
struct RandomBase {
  ReductiveAlgebra red;
  Matrix d0;
  DoubleExtensionData data() const { return {red.algebra, red.form, d0}; }
};

inline RandomBase random_base(std::mt19937& rng, std::size_t max_dim = 6) {
  std::uniform_int_distribution<std::size_t> kd(0, max_dim / 3);
  const std::size_t k = kd(rng);
  const std::size_t free = max_dim - 3 * k;
  std::uniform_int_distribution<std::size_t> md(k == 0 ? 1 : 0, free);
  const std::size_t m = md(rng);
  std::vector<Rational> lambdas;
  for (std::size_t i = 0; i < k; ++i) lambdas.push_back(random_positive(rng));
  RandomBase out{compact_reductive(lambdas, m), {}};
  const std::size_t n = out.red.algebra.dim();
  const std::size_t s = 3 * k;
  Vector x(n);
  for (std::size_t i = 0; i < s; ++i) x[i] = random_rational(rng);
  out.d0 = ad(out.red.algebra, x);
  if (m > 0) {
    Matrix ba = out.red.form.matrix().block(s, s, m, m);
    out.d0.set_block(s, s, *inverse(ba) * random_antisymmetric(rng, m));
  }
  return out;
}

inline std::vector<Rational> random_mu(std::mt19937& rng, std::size_t len) {
  std::vector<Rational> mu;
  for (std::size_t i = 0; i < len; ++i) mu.push_back(random_positive(rng, 7, 4));
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return mu;
}

}  // namespace liedual::testing
