#include "liedual/derivations.hpp"

#include "liedual/error.hpp"

namespace liedual {

namespace {

// Unknown D(i, j) lives at position i * n + j.
void add_leibniz_equations(const LieAlgebra& L, RowReducer& eqs) {
  const std::size_t n = L.dim();
  const std::size_t N = n * n;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(N);
        bool any = false;
        for (std::size_t m = 0; m < n; ++m) {
          if (sgn(L.constant(a, b, m)) != 0) {
            row[k * n + m] += L.constant(a, b, m);
            any = true;
          }
          if (sgn(L.constant(m, b, k)) != 0) {
            row[m * n + a] -= L.constant(m, b, k);
            any = true;
          }
          if (sgn(L.constant(a, m, k)) != 0) {
            row[m * n + b] -= L.constant(a, m, k);
            any = true;
          }
        }
        if (any) eqs.add(std::move(row));
      }
}

void add_skew_equations(const SymBilinearForm& B, RowReducer& eqs) {
  const std::size_t n = B.dim();
  const Matrix& M = B.matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector row(n * n);
      bool any = false;
      for (std::size_t m = 0; m < n; ++m) {
        if (sgn(M(m, j)) != 0) {
          row[m * n + i] += M(m, j);
          any = true;
        }
        if (sgn(M(i, m)) != 0) {
          row[m * n + j] += M(i, m);
          any = true;
        }
      }
      if (any) eqs.add(std::move(row));
    }
}

std::vector<Derivation> to_matrices(const std::vector<Vector>& vs, std::size_t n) {
  std::vector<Derivation> out;
  for (const auto& v : vs) {
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(i, j) = v[i * n + j];
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

bool is_derivation(const LieAlgebra& L, const Derivation& D) {
  const std::size_t n = L.dim();
  if (D.rows() != n || D.cols() != n) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector lhs = D * L.bracket_basis(a, b);
      Vector rhs = bracket(L, D.column(a), unit_vector(n, b)) + bracket(L, unit_vector(n, a), D.column(b));
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_skew(const SymBilinearForm& B, const Derivation& D) {
  if (D.rows() != B.dim() || D.cols() != B.dim()) return false;
  return (D.transpose() * B.matrix() + B.matrix() * D).is_zero();
}

std::vector<Derivation> derivation_space(const LieAlgebra& L) {
  RowReducer eqs(L.dim() * L.dim());
  add_leibniz_equations(L, eqs);
  return to_matrices(eqs.nullspace(), L.dim());
}

std::vector<Derivation> skew_derivation_space(const LieAlgebra& L, const SymBilinearForm& B) {
  if (B.dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "form and algebra dimensions differ");
  RowReducer eqs(L.dim() * L.dim());
  add_skew_equations(B, eqs);
  add_leibniz_equations(L, eqs);
  return to_matrices(eqs.nullspace(), L.dim());
}

SkewDecomposition decompose_skew_derivation(const LieAlgebra& L, const SymBilinearForm& B, const Derivation& D,
                                            std::size_t ss_dim) {
  const std::size_t n = L.dim();
  if (ss_dim > n) throw Error(ErrorCode::DimensionMismatch, "semisimple block larger than the algebra");
  if (D.rows() != n || D.cols() != n || B.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "derivation, form and algebra dimensions differ");
  const std::size_t m = n - ss_dim;
  if (!D.block(0, ss_dim, ss_dim, m).is_zero() || !D.block(ss_dim, 0, m, ss_dim).is_zero())
    throw Error(ErrorCode::DecompositionFailed, "derivation mixes the semisimple and abelian blocks");

  // Solve sum_i x_i ad(e_i) = D on the columns of the semisimple block.
  Matrix A(n * ss_dim, ss_dim);
  Vector rhs(n * ss_dim);
  for (std::size_t i = 0; i < ss_dim; ++i) {
    Matrix adi = ad_basis(L, i);
    for (std::size_t j = 0; j < ss_dim; ++j)
      for (std::size_t r = 0; r < n; ++r) A(j * n + r, i) = adi(r, j);
  }
  for (std::size_t j = 0; j < ss_dim; ++j)
    for (std::size_t r = 0; r < n; ++r) rhs[j * n + r] = D(r, j);
  auto sol = solve(A, rhs);
  if (!sol) throw Error(ErrorCode::DecompositionFailed, "derivation is not inner on the semisimple block");

  SkewDecomposition out;
  out.x = zero_vector(n);
  for (std::size_t i = 0; i < ss_dim; ++i) out.x[i] = (*sol)[i];
  out.t = D.block(ss_dim, ss_dim, m, m);
  SymBilinearForm Ba(B.matrix().block(ss_dim, ss_dim, m, m));
  if (!is_skew(Ba, out.t)) throw Error(ErrorCode::DecompositionFailed, "abelian part is not skew");
  if (reassemble(L, out, ss_dim) != D)
    throw Error(ErrorCode::DecompositionFailed, "reassembled derivation differs from the input");
  return out;
}

Derivation reassemble(const LieAlgebra& L, const SkewDecomposition& parts, std::size_t ss_dim) {
  Matrix d = ad(L, parts.x);
  d.set_block(ss_dim, ss_dim, d.block(ss_dim, ss_dim, parts.t.rows(), parts.t.cols()) + parts.t);
  return d;
}

}  // namespace liedual
