#include <doctest.h>

#include "liedual/catalog.hpp"
#include "liedual/classification.hpp"
#include "support.hpp"

using namespace liedual;

namespace {

bool leibniz_brute(const LieAlgebra& L, const Matrix& D) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        Rational s;
        for (std::size_t k = 0; k < n; ++k) {
          s += D(m, k) * L.constant(i, j, k);
          s -= D(k, i) * L.constant(k, j, m);
          s -= D(k, j) * L.constant(i, k, m);
        }
        if (sgn(s) != 0) return false;
      }
  return true;
}

Subspace as_subspace(const std::vector<Matrix>& ms, std::size_t n) {
  std::vector<Vector> vs;
  for (const auto& m : ms) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(m(i, j));
    vs.push_back(std::move(v));
  }
  return Subspace::span(n * n, vs);
}

}  // namespace

TEST_SUITE("derivations") {
  TEST_CASE("derivation algebra dimensions") {
    CHECK(derivation_space(abelian(3)).size() == 9);
    auto s = derivation_space(su2());
    CHECK(s.size() == 3);
    CHECK(as_subspace(s, 3) == as_subspace({ad_basis(su2(), 0), ad_basis(su2(), 1), ad_basis(su2(), 2)}, 3));
    CHECK(derivation_space(heisenberg(symplectic_blocks({1}))).size() == 6);
  }

  TEST_CASE("basis elements satisfy Leibniz") {
    for (const auto& L : {heisenberg(symplectic_blocks({1})), galilei_algebra(2), leibniz_counterexample(0, 1, 1).algebra})
      for (const auto& d : derivation_space(L)) {
        CHECK(leibniz_brute(L, d));
        CHECK(is_derivation(L, d));
      }
  }

  TEST_CASE("skew derivation spaces") {
    CHECK(skew_derivation_space(abelian(4), SymBilinearForm::identity(4)).size() == 6);
    CHECK(skew_derivation_space(su2(), su2_form(1)).size() == 3);
    ReductiveAlgebra r = compact_reductive({ratio(3, 2)}, 2);
    auto sk = skew_derivation_space(r.algebra, r.form);
    CHECK(sk.size() == 4);
    Subspace all = as_subspace(derivation_space(r.algebra), 5);
    CHECK(all.contains(as_subspace(sk, 5)));
    for (const auto& d : sk) CHECK(is_skew(r.form, d));
  }

  TEST_CASE("decomposition examples") {
    ReductiveAlgebra r = compact_reductive({1}, 2);
    Matrix t{{0, 5}, {-5, 0}};
    Matrix d = ad_basis(r.algebra, 2);
    d.set_block(3, 3, t);
    SkewDecomposition p = decompose_skew_derivation(r.algebra, r.form, d, 3);
    CHECK(p.x == unit_vector(5, 2));
    CHECK(p.t == t);
    SkewDecomposition z = decompose_skew_derivation(r.algebra, r.form, Matrix(5, 5), 3);
    CHECK(is_zero(z.x));
    CHECK(z.t.is_zero());
    Matrix only_t(5, 5);
    only_t.set_block(3, 3, t);
    SkewDecomposition o = decompose_skew_derivation(r.algebra, r.form, only_t, 3);
    CHECK(is_zero(o.x));
    CHECK(o.t == t);
  }

  TEST_CASE("decomposition rejects bad input") {
    ReductiveAlgebra r = compact_reductive({1}, 2);
    Matrix mix(5, 5);
    mix(3, 0) = 1;
    CHECK_THROWS_AS(decompose_skew_derivation(r.algebra, r.form, mix, 3), Error);
    Matrix sym(5, 5);
    sym(3, 3) = 1;
    CHECK_THROWS_AS(decompose_skew_derivation(r.algebra, r.form, sym, 3), Error);
  }

  TEST_CASE("random decompositions reassemble") {
    std::mt19937 rng(21);
    for (int t = 0; t < 50; ++t) {
      auto rb = testing::random_base(rng);
      SkewDecomposition p = decompose_skew_derivation(rb.red.algebra, rb.red.form, rb.d0, rb.red.ss_dim);
      CHECK(reassemble(rb.red.algebra, p, rb.red.ss_dim) == rb.d0);
      CHECK(leibniz_brute(rb.red.algebra, rb.d0));
    }
  }
}
