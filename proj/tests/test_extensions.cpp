#include <doctest.h>

#include "liedual/catalog.hpp"
#include "liedual/classification.hpp"
#include "support.hpp"

using namespace liedual;

namespace {

std::size_t idx(const LieAlgebra& L, const std::string& label) {
  const auto& l = L.labels();
  return static_cast<std::size_t>(std::find(l.begin(), l.end(), label) - l.begin());
}

Matrix permutation(const std::vector<std::size_t>& cols) {
  Matrix p(cols.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) p(cols[j], j) = 1;
  return p;
}

}  // namespace

TEST_SUITE("extensions") {
  TEST_CASE("cocycles") {
    CHECK_THROWS_AS(Cocycle2(Matrix{{0, 1}, {1, 0}}), Error);
    CHECK(is_cocycle(abelian(3), Cocycle2(Matrix{{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}})));
    // su2 has no nontrivial 2-cohomology and every 2-form is closed
    Cocycle2 a(Matrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
    CHECK(is_cocycle(su2(), a));
    // on heis5, a(z, e1) = 1 fails on (e3, e4, e1)
    LieAlgebra h = heisenberg(symplectic_blocks({1, 1}));
    Matrix bad(5, 5);
    bad(4, 0) = 1;
    bad(0, 4) = -1;
    CHECK_FALSE(is_cocycle(h, Cocycle2(bad)));
  }

  TEST_CASE("central extensions") {
    CHECK(central_extend(abelian(2), Cocycle2(symplectic_blocks({1}))).same_structure(heisenberg(symplectic_blocks({1}))));
    CHECK(central_extend(su2(), Cocycle2::zero(3)).same_structure(direct_sum(su2(), abelian(1))));
    for (std::size_t n : {1, 2, 3}) {
      LieAlgebra s0 = kinematical({n, KinematicalFamily::S0, 0, 0});
      Matrix a(s0.dim(), s0.dim());
      for (std::size_t i = 1; i <= n; ++i) {
        a(idx(s0, "B" + std::to_string(i)), idx(s0, "P" + std::to_string(i))) = 1;
        a(idx(s0, "P" + std::to_string(i)), idx(s0, "B" + std::to_string(i))) = -1;
      }
      CHECK(central_extend(s0, Cocycle2(a)).same_structure(carroll_algebra(n)));
    }
    LieAlgebra h = heisenberg(symplectic_blocks({1, 1}));
    Matrix bad(5, 5);
    bad(4, 0) = 1;
    bad(0, 4) = -1;
    CHECK_THROWS_AS(central_extend(h, Cocycle2(bad)), Error);
  }

  TEST_CASE("derivation from cocycle") {
    Cocycle2 a(Matrix{{0, 1}, {-1, 0}});
    Derivation d = derivation_from_cocycle(abelian(2), SymBilinearForm::identity(2), a);
    // a(x, y) = <D x, y>, so with the identity form D is the transpose of a's matrix
    CHECK(d == a.matrix().transpose());
    CHECK(cocycle_from_derivation(SymBilinearForm::identity(2), d) == a);
    SymBilinearForm kappa(killing_form(su2()));
    Matrix ae3 = ad_basis(su2(), 2);
    Cocycle2 k(ae3.transpose() * kappa.matrix());
    CHECK(derivation_from_cocycle(su2(), kappa, k) == ae3);
    CHECK_THROWS_AS(derivation_from_cocycle(abelian(2), SymBilinearForm::zero(2), a), Error);
  }

  TEST_CASE("cocycle and derivation round trips") {
    std::mt19937 rng(2);
    for (int t = 0; t < 40; ++t) {
      auto rb = testing::random_base(rng);
      Cocycle2 a = cocycle_from_derivation(rb.red.form, rb.d0);
      CHECK(is_cocycle(rb.red.algebra, a));
      CHECK(derivation_from_cocycle(rb.red.algebra, rb.red.form, a) == rb.d0);
    }
  }

  TEST_CASE("extension by a derivation") {
    Matrix rot{{0, -1}, {1, 0}};
    LieAlgebra g = extend_by_derivation(abelian(2), rot);
    CHECK(bracket(g, unit_vector(3, 2), unit_vector(3, 0)) == unit_vector(3, 1));
    CHECK(extend_by_derivation(su2(), Matrix(3, 3)).same_structure(direct_sum(su2(), abelian(1))));
    CHECK_THROWS_AS(extend_by_derivation(su2(), Matrix::identity(3)), Error);
    for (std::size_t n : {1, 2, 3}) {
      LieAlgebra c = carroll_algebra(n);
      Matrix d(c.dim(), c.dim());
      for (std::size_t i = 1; i <= n; ++i)
        d(idx(c, "P" + std::to_string(i)), idx(c, "B" + std::to_string(i))) = -1;
      LieAlgebra e = extend_by_derivation(c, d);
      // (L, B, P, D, Z) -> (L, B, P, H, M)
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i + 1 < c.dim(); ++i) cols.push_back(i);
      cols.push_back(c.dim());
      cols.push_back(c.dim() - 1);
      CHECK(change_basis(e, permutation(cols)).same_structure(bargmann_algebra(n)));
    }
  }

  TEST_CASE("double extension examples") {
    DoubleExtension nw = nappi_witten({1});
    DoubleExtension e = double_extend({abelian(2), SymBilinearForm::identity(2), Matrix{{0, -1}, {1, 0}}});
    CHECK(e.algebra.same_structure(nw.algebra));
    CHECK(e.form == nw.form);
    CHECK(e.algebra.labels() == std::vector<std::string>{"e1", "e2", "Z", "D"});
    // the opposite rotation gives the same algebra after swapping e1 and e2
    DoubleExtension f = double_extend({abelian(2), SymBilinearForm::identity(2), Matrix{{0, 1}, {-1, 0}}});
    CHECK(change_basis(f.algebra, permutation({1, 0, 2, 3})).same_structure(nw.algebra));
    DoubleExtension z = double_extend({abelian(3), SymBilinearForm::identity(3), Matrix(3, 3)});
    CHECK(z.algebra.is_abelian());
    CHECK(signature(z.form) == Signature{4, 1, 0});
    CHECK(z.form.matrix().block(3, 3, 2, 2) == Matrix{{0, 1}, {1, 0}});
  }

  TEST_CASE("double extension validation") {
    CHECK_THROWS_AS(double_extend({abelian(2), SymBilinearForm::zero(2), Matrix(2, 2)}), Error);
    CHECK_THROWS_AS(double_extend({abelian(2), SymBilinearForm::identity(2), Matrix{{1, 0}, {0, 0}}}), Error);
    CHECK_THROWS_AS(double_extend({su2(), SymBilinearForm::identity(2), Matrix(3, 3)}), Error);
  }

  TEST_CASE("Z-perp is the central extension by the derived cocycle") {
    std::mt19937 rng(4);
    for (int t = 0; t < 40; ++t) {
      auto rb = testing::random_base(rng);
      DoubleExtension E = double_extend(rb.data());
      const std::size_t N = E.algebra.dim();
      Subspace zperp = orthogonal_complement(E.form, Subspace::span(N, {unit_vector(N, E.z_index)}));
      Subalgebra s = subalgebra(E.algebra, zperp);
      LieAlgebra c = central_extend(rb.red.algebra, cocycle_from_derivation(rb.red.form, rb.d0));
      CHECK(s.algebra.same_structure(c));
      Quotient q = quotient_by_ideal(E.algebra, Subspace::span(N, {unit_vector(N, E.z_index)}));
      CHECK(q.algebra.same_structure(extend_by_derivation(rb.red.algebra, rb.d0)));
    }
  }

  TEST_CASE("data equality") {
    DoubleExtensionData a{abelian(2), SymBilinearForm::identity(2), Matrix{{0, -1}, {1, 0}}};
    DoubleExtensionData b = a;
    CHECK(a == b);
    b.der = Matrix{{0, -2}, {2, 0}};
    CHECK_FALSE(a == b);
  }
}
