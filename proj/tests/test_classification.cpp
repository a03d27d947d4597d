#include <doctest.h>

#include <cmath>

#include "liedual/catalog.hpp"
#include "liedual/classification.hpp"
#include "support.hpp"

using namespace liedual;

namespace {

Matrix rotation() { return Matrix{{0, -1}, {1, 0}}; }

bool even_only(const Polynomial& p) {
  const auto& c = p.coefficients();
  const std::size_t d = c.size() - 1;
  for (std::size_t k = 0; k < c.size(); ++k)
    if ((d - k) % 2 == 1 && sgn(c[k]) != 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("classification") {
  TEST_CASE("reductive splitting") {
    ReductiveAlgebra r = compact_reductive({1}, 3);
    ReductiveSplit s = reductive_decompose(r.algebra, r.form);
    CHECK(s.ss.dim() == 3);
    CHECK(s.a.dim() == 3);
    CHECK(restrict(r.form, s.ss).matrix().block(0, 0, 3, 3) == su2_form(1).matrix());
    ReductiveSplit a = reductive_decompose(abelian(3), SymBilinearForm::identity(3));
    CHECK(a.ss.dim() == 0);
    CHECK(a.a == Subspace::whole(3));
    LieAlgebra h = heisenberg(symplectic_blocks({1}));
    for (const auto& f : invariant_sym_forms(h).basis) {
      try {
        reductive_decompose(h, f);
        FAIL("expected NotReductive");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotReductive);
      }
    }
  }

  TEST_CASE("kernel splitting") {
    KernelSplit z = split_kernel(SymBilinearForm::identity(2), Matrix(2, 2));
    CHECK(z.a0 == Subspace::whole(2));
    CHECK(z.a1.dim() == 0);
    KernelSplit r = split_kernel(SymBilinearForm::identity(2), rotation());
    CHECK(r.a0.dim() == 0);
    CHECK(r.omega == Matrix{{0, 1}, {-1, 0}});
    Matrix d(3, 3);
    d.set_block(0, 0, rotation());
    KernelSplit b = split_kernel(SymBilinearForm::identity(3), d);
    CHECK(b.a0.dim() == 1);
    CHECK(b.a1.dim() == 2);
  }

  TEST_CASE("simple factors") {
    CHECK(simple_factors(su2()).size() == 1);
    auto f = simple_factors(compact_reductive({1, 2}, 0).algebra);
    REQUIRE(f.size() == 2);
    CHECK(f[0].dim() == 3);
    CHECK(f[1].dim() == 3);
  }

  TEST_CASE("canonical data examples") {
    ClassificationData nw = canonical_data(nappi_witten({3, 1}));
    CHECK(nw.char_poly.to_string() == "t^4 + 10t^2 + 9");
    CHECK(nw.a1_dim == 4);
    CHECK(*exact_skew_eigenvalues(nw.char_poly) == std::vector<Rational>{3, 1});
    auto num = numeric_skew_eigenvalues(nw.char_poly);
    REQUIRE(num.size() == 2);
    CHECK(std::abs(num[0] - 3) < 1e-9);
    CHECK(std::abs(num[1] - 1) < 1e-9);

    ClassificationData zero = canonical_data(DoubleExtensionData{abelian(2), SymBilinearForm::identity(2), Matrix(2, 2)});
    CHECK(zero.char_poly == Polynomial::constant(1));
    CHECK(zero.a1_dim == 0);
    CHECK(zero.a0_dim == 2);
    CHECK(exact_skew_eigenvalues(zero.char_poly)->empty());

    ReductiveAlgebra r = compact_reductive({2}, 2);
    Matrix d(5, 5);
    d.set_block(3, 3, rotation());
    ClassificationData s = canonical_data(DoubleExtensionData{r.algebra, r.form, d});
    REQUIRE(s.semisimple.size() == 1);
    CHECK(s.semisimple[0] == SimpleFactor{3, 2});
    CHECK(s.a0_dim == 0);
    CHECK(*exact_skew_eigenvalues(s.char_poly) == std::vector<Rational>{1});
    CHECK(s.canonical_record() ==
          "semisimple: (3, 2)\na0_dim: 0\na1_dim: 2\nchar_poly: t^2 + 1\nchar_poly_coefficients: 1 0 1\n");
  }

  TEST_CASE("irrational skew eigenvalues") {
    Polynomial p({2, 0, 1});  // t^2 + 2, mu = sqrt 2
    CHECK_FALSE(exact_skew_eigenvalues(p).has_value());
    auto m = numeric_skew_eigenvalues(p, 1e-12);
    REQUIRE(m.size() == 1);
    CHECK(std::abs(m[0] - std::sqrt(2.0)) < 1e-12);
    CHECK_THROWS_AS(numeric_skew_eigenvalues(Polynomial({-1, 0, 1})), Error);
    Polynomial rep = Polynomial({2, 0, 1}) * Polynomial({2, 0, 1});
    auto mm = numeric_skew_eigenvalues(rep);
    REQUIRE(mm.size() == 2);
    CHECK(std::abs(mm[1] - std::sqrt(2.0)) < 1e-9);
  }

  TEST_CASE("normal forms") {
    DoubleExtension nw4 = nappi_witten({1});
    CHECK(signature(nw4.form) == Signature{3, 1, 0});
    DoubleExtension a2 = nappi_witten({});
    CHECK(a2.algebra.dim() == 2);
    CHECK(a2.algebra.is_abelian());
    CHECK(signature(a2.form) == Signature{1, 1, 0});
    CHECK_THROWS_AS(nappi_witten({1, 3}), Error);
    CHECK_THROWS_AS(nappi_witten({0}), Error);

    LieAlgebra h5 = heisenberg(symplectic_blocks({2, 1}));
    CHECK(bracket(h5, unit_vector(5, 0), unit_vector(5, 1)) == Rational(2) * unit_vector(5, 4));
    CHECK(bracket(h5, unit_vector(5, 2), unit_vector(5, 3)) == unit_vector(5, 4));
    LieAlgebra h3 = heisenberg(symplectic_blocks({1}));
    LieAlgebra h35 = heisenberg(Rational(5) * symplectic_blocks({1}));
    CHECK_FALSE(h3.same_structure(h35));
    CHECK(center(h35).dim() == 1);
    CHECK_THROWS_AS(heisenberg(Matrix{{0, 0}, {0, 0}}), Error);

    GalileanAlgebra g = galilean_extension_algebra(rotation());
    CHECK(g.algebra.dim() == 3);
    CHECK_FALSE(find_galilean(g.algebra).empty());
    GalileanAlgebra g0 = galilean_extension_algebra(Matrix(2, 2));
    CHECK(g0.algebra.is_abelian());
    CHECK(g0.structure.tau.coords == unit_vector(3, 2));
    CHECK(galilean_extension_algebra(-symplectic_blocks({3, 1})).algebra.dim() == 5);
  }

  TEST_CASE("carrollian ideal of the normal form is heisenberg") {
    std::mt19937 rng(31);
    for (int t = 0; t < 20; ++t) {
      auto mu = testing::random_mu(rng, 1 + rng() % 3);
      CHECK(carroll_ideal(nappi_witten(mu)).algebra.same_structure(heisenberg(symplectic_blocks(mu))));
    }
  }

  TEST_CASE("characteristic polynomials are even") {
    std::mt19937 rng(9);
    for (int t = 0; t < 40; ++t) {
      auto rb = testing::random_base(rng);
      ClassificationData cd = canonical_data(rb.data());
      CHECK(even_only(cd.char_poly));
      CHECK(cd.a1_dim % 2 == 0);
      CHECK(cd.a0_dim + cd.a1_dim + 3 * cd.semisimple.size() == rb.red.algebra.dim());
      for (const auto& f : cd.semisimple) CHECK(sgn(f.lambda) > 0);
      auto mus = numeric_skew_eigenvalues(cd.char_poly);
      CHECK(2 * mus.size() == cd.a1_dim);
    }
  }

  TEST_CASE("same class is invariant under isometric change of basis") {
    DoubleExtensionData a{abelian(4), SymBilinearForm::identity(4), -symplectic_blocks({3, 1})};
    // swap the two planes: an isometry conjugating the derivation
    Matrix p(4, 4);
    p(0, 2) = p(1, 3) = p(2, 0) = p(3, 1) = 1;
    DoubleExtensionData b{abelian(4), SymBilinearForm::identity(4), p * a.der * p};
    CHECK(canonical_data(a).same_class(canonical_data(b)));
    DoubleExtensionData c{abelian(4), SymBilinearForm::identity(4), -symplectic_blocks({3, 2})};
    CHECK_FALSE(canonical_data(a).same_class(canonical_data(c)));
  }
}
