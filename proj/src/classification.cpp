#include "liedual/classification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "liedual/catalog.hpp"
#include "liedual/error.hpp"

namespace liedual {

namespace {

Vector lift(const Vector& coords, const std::vector<Vector>& basis, std::size_t n) {
  Vector v = zero_vector(n);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) v = v + coords[i] * basis[i];
  return v;
}

// Matrix of a map restricted to an invariant subspace, in its echelon basis.
Matrix restrict_map(const Matrix& A, const Subspace& S) {
  Matrix r(S.dim(), S.dim());
  for (std::size_t j = 0; j < S.dim(); ++j) {
    Vector c = S.coordinates(A * S.basis()[j]);
    for (std::size_t i = 0; i < S.dim(); ++i) r(i, j) = c[i];
  }
  return r;
}

Polynomial even_to_q(const Polynomial& p) {
  // q(s) = p(t) with t^2 = -s.
  const auto& c = p.coefficients();
  std::vector<Rational> q;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % 2 == 1) {
      if (sgn(c[k]) != 0) throw Error(ErrorCode::InvalidData, "characteristic polynomial has odd terms");
      continue;
    }
    q.push_back((k / 2) % 2 == 0 ? c[k] : Rational(-c[k]));
  }
  return Polynomial(std::move(q));
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return std::nullopt;
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(b.get_mpz_t(), r.get_den_mpz_t());
  return Rational(a, b);
}

}  // namespace

ReductiveSplit reductive_decompose(const LieAlgebra& L0, const SymBilinearForm& B0) {
  const std::size_t n = L0.dim();
  if (B0.dim() != n) throw Error(ErrorCode::DimensionMismatch, "form and algebra dimensions differ");
  if (signature(B0) != Signature{n, 0, 0}) throw Error(ErrorCode::NotReductive, "form is not positive definite");
  if (!is_invariant(L0, B0)) throw Error(ErrorCode::NotReductive, "form is not ad-invariant");
  ReductiveSplit s{derived_subalgebra(L0), center(L0)};
  if (s.ss.dim() + s.a.dim() != n || s.ss.intersect(s.a).dim() != 0)
    throw Error(ErrorCode::NotReductive, "derived subalgebra and center are not complementary");
  for (const auto& x : s.ss.basis())
    for (const auto& y : s.a.basis())
      if (sgn(B0(x, y)) != 0) throw Error(ErrorCode::NotReductive, "derived subalgebra and center are not orthogonal");
  return s;
}

KernelSplit split_kernel(const SymBilinearForm& B, const Matrix& D0) {
  const std::size_t n = B.dim();
  if (D0.rows() != n || D0.cols() != n) throw Error(ErrorCode::DimensionMismatch, "map and form dimensions differ");
  KernelSplit k;
  k.a0 = Subspace::span(n, nullspace(D0));
  k.a1 = orthogonal_complement(B, k.a0);
  const auto& b = k.a1.basis();
  k.omega = Matrix(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    Vector di = D0 * b[i];
    for (std::size_t j = 0; j < b.size(); ++j) k.omega(i, j) = B(di, b[j]);
  }
  return k;
}

std::vector<Subspace> simple_factors(const LieAlgebra& L) {
  const std::size_t m = L.dim();
  if (m == 0) return {};
  std::vector<Matrix> ads;
  for (std::size_t x = 0; x < m; ++x) ads.push_back(ad_basis(L, x));
  RowReducer eqs(m * m);
  for (const auto& A : ads)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        Vector row(m * m);
        for (std::size_t k = 0; k < m; ++k) {
          if (sgn(A(k, c)) != 0) row[r * m + k] += A(k, c);
          if (sgn(A(r, k)) != 0) row[k * m + c] -= A(r, k);
        }
        if (!is_zero(row)) eqs.add(std::move(row));
      }
  std::vector<Vector> centroid = eqs.nullspace();
  const std::size_t k = centroid.size();
  if (k <= 1) return {Subspace::whole(m)};

  std::uint64_t state = 12345;
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix T(m, m);
    for (std::size_t i = 0; i < k; ++i) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      Rational c = static_cast<long>((state >> 33) % 97) - 48;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) T(r, s) += c * centroid[i][r * m + s];
    }
    auto roots = rational_roots(characteristic_polynomial(T));
    if (roots.size() != k) continue;
    std::vector<Subspace> out;
    std::size_t total = 0;
    for (const auto& [t, mult] : roots) {
      Matrix shifted = T - t * Matrix::identity(m);
      out.push_back(Subspace::span(m, nullspace(shifted)));
      total += out.back().dim();
    }
    if (total != m) continue;
    std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return a.pivots() < b.pivots(); });
    return out;
  }
  return {Subspace::whole(m)};
}

bool ClassificationData::same_class(const ClassificationData& o) const {
  return semisimple == o.semisimple && a0_dim == o.a0_dim && char_poly == o.char_poly;
}

std::string ClassificationData::canonical_record() const {
  std::ostringstream s;
  s << "semisimple:";
  for (const auto& f : semisimple) s << " (" << f.dim << ", " << to_string(f.lambda) << ")";
  s << "\na0_dim: " << a0_dim << "\na1_dim: " << a1_dim << "\nchar_poly: " << char_poly.to_string() << "\n";
  s << "char_poly_coefficients:";
  const auto& c = char_poly.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) s << " " << to_string(c[k]);
  s << "\n";
  return s.str();
}

ClassificationData canonical_data(const DoubleExtensionData& data) {
  data.validate();
  const LieAlgebra& L0 = data.base;
  const std::size_t n = L0.dim();
  ReductiveSplit split = reductive_decompose(L0, data.form);

  ClassificationData out;
  if (split.ss.dim() > 0) {
    Subalgebra ss = subalgebra(L0, split.ss);
    for (const auto& f : simple_factors(ss.algebra)) {
      std::vector<Vector> vs;
      for (const auto& c : f.basis()) vs.push_back(lift(c, split.ss.basis(), n));
      Subalgebra fa = subalgebra(L0, Subspace::span(n, vs));
      std::vector<Vector> fb;
      for (std::size_t j = 0; j < fa.inclusion.source_dim(); ++j) fb.push_back(fa.inclusion.matrix().column(j));
      Matrix kappa = killing_form(fa.algebra);
      Matrix b = gram(data.form, fb).matrix();
      Rational lambda;
      bool found = false;
      for (std::size_t i = 0; i < kappa.rows() && !found; ++i)
        for (std::size_t j = 0; j < kappa.cols() && !found; ++j)
          if (sgn(kappa(i, j)) != 0) {
            lambda = -b(i, j) / kappa(i, j);
            found = true;
          }
      if (!found || b != -lambda * kappa || sgn(lambda) <= 0)
        throw Error(ErrorCode::NotReductive, "form is not a positive multiple of the Killing form on a simple factor");
      out.semisimple.push_back({fa.algebra.dim(), lambda});
    }
    std::sort(out.semisimple.begin(), out.semisimple.end());
  }

  Matrix T = restrict_map(data.der, split.a);
  SymBilinearForm Ba = gram(data.form, split.a.basis());
  KernelSplit ks = split_kernel(Ba, T);
  out.a0_dim = ks.a0.dim();
  out.a1_dim = ks.a1.dim();
  out.omega = ks.omega;
  out.char_poly = characteristic_polynomial(restrict_map(T, ks.a1));
  return out;
}

ClassificationData canonical_data(const DoubleExtension& E) {
  const std::size_t n = E.algebra.dim() - 2;
  DoubleExtensionData data;
  std::vector<Rational> t(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t[(i * n + j) * n + k] = E.algebra.constant(i, j, k);
  std::vector<std::string> labels(E.algebra.labels().begin(), E.algebra.labels().begin() + static_cast<long>(n));
  data.base = LieAlgebra::from_table(std::move(labels), std::move(t));
  data.form = SymBilinearForm(E.form.matrix().block(0, 0, n, n));
  data.der = ad_basis(E.algebra, E.d_index).block(0, 0, n, n);
  return canonical_data(data);
}

std::optional<std::vector<Rational>> exact_skew_eigenvalues(const Polynomial& char_poly) {
  Polynomial q = even_to_q(char_poly);
  std::vector<Rational> mu;
  std::size_t total = 0;
  for (const auto& [s, mult] : rational_roots(q)) {
    auto r = rational_sqrt(s);
    if (!r || sgn(*r) == 0) return std::nullopt;
    for (std::size_t i = 0; i < mult; ++i) mu.push_back(*r);
    total += mult;
  }
  if (static_cast<int>(total) != q.degree()) return std::nullopt;
  std::sort(mu.begin(), mu.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return mu;
}

std::vector<double> numeric_skew_eigenvalues(const Polynomial& char_poly, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidData, "tolerance must be positive");
  Polynomial q = even_to_q(char_poly);
  std::vector<double> mu;
  if (q.degree() <= 0) return mu;
  std::vector<std::vector<Polynomial>> chains;
  for (Polynomial g = q; g.degree() > 0; g = gcd(g, g.derivative())) chains.push_back(sturm_chain(g));
  Rational width(tol);
  width *= width;
  int total = 0;
  for (const auto& [lo, hi] : isolate_real_roots(q, width)) {
    if (sgn(lo) < 0) throw Error(ErrorCode::InvalidData, "skew map has a non-imaginary eigenvalue");
    int mult = 0;
    for (const auto& ch : chains)
      if (count_real_roots(ch, lo, hi) == 1) ++mult;
    double s = Rational((lo + hi) / 2).get_d();
    for (int i = 0; i < mult; ++i) mu.push_back(std::sqrt(s));
    total += mult;
  }
  if (total != q.degree()) throw Error(ErrorCode::InvalidData, "skew map has a non-imaginary eigenvalue");
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return mu;
}

Matrix symplectic_blocks(const std::vector<Rational>& mu) {
  Matrix w(2 * mu.size(), 2 * mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j) {
    w(2 * j, 2 * j + 1) = mu[j];
    w(2 * j + 1, 2 * j) = -mu[j];
  }
  return w;
}

DoubleExtension nappi_witten(const std::vector<Rational>& mu) {
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (sgn(mu[j]) <= 0) throw Error(ErrorCode::InvalidData, "mu must be positive");
    if (j > 0 && mu[j] > mu[j - 1]) throw Error(ErrorCode::InvalidData, "mu must be sorted descending");
  }
  const std::size_t m = 2 * mu.size();
  Matrix D0(m, m);
  for (std::size_t j = 0; j < mu.size(); ++j) {
    D0(2 * j, 2 * j + 1) = -mu[j];
    D0(2 * j + 1, 2 * j) = mu[j];
  }
  return double_extend({abelian(m), SymBilinearForm::identity(m), D0});
}

LieAlgebra heisenberg(const Matrix& omega) {
  if (!omega.square() || !omega.is_antisymmetric()) throw Error(ErrorCode::InvalidData, "omega must be antisymmetric");
  if (omega.rows() % 2 != 0 || sgn(determinant(omega)) == 0)
    throw Error(ErrorCode::DegenerateForm, "omega is degenerate");
  return central_extend(abelian(omega.rows()), Cocycle2(omega));
}

GalileanAlgebra galilean_extension_algebra(const Matrix& D0) {
  if (!D0.square() || !D0.is_antisymmetric()) throw Error(ErrorCode::InvalidData, "D0 must be skew");
  const std::size_t m = D0.rows();
  LieAlgebra L = extend_by_derivation(abelian(m), D0);
  Matrix G(m + 1, m + 1);
  G.set_block(0, 0, Matrix::identity(m));
  GalileanStructure s{Covector{unit_vector(m + 1, m)}, SymBilinearForm(std::move(G))};
  if (auto why = galilean_violation(L, s)) throw Error(ErrorCode::StructureInvalid, *why);
  return {std::move(L), std::move(s)};
}

}  // namespace liedual
