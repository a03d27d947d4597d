#include "liedual/extensions.hpp"

#include "liedual/error.hpp"

namespace liedual {

Cocycle2::Cocycle2(Matrix m) : m_(std::move(m)) {
  if (!m_.is_antisymmetric()) throw Error(ErrorCode::InvalidData, "cocycle matrix is not antisymmetric");
}

bool is_cocycle(const LieAlgebra& L, const Cocycle2& alpha) {
  const std::size_t n = L.dim();
  if (alpha.dim() != n) return false;
  const Matrix& a = alpha.matrix();
  auto term = [&](std::size_t i, std::size_t j, std::size_t k) {
    Rational s;
    for (std::size_t m = 0; m < n; ++m)
      if (sgn(L.constant(i, j, m)) != 0) s += L.constant(i, j, m) * a(m, k);
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (sgn(term(i, j, k) + term(j, k, i) + term(k, i, j)) != 0) return false;
  return true;
}

LieAlgebra central_extend(const LieAlgebra& L0, const Cocycle2& alpha, const std::string& z_label) {
  const std::size_t n = L0.dim();
  if (alpha.dim() != n) throw Error(ErrorCode::DimensionMismatch, "cocycle and algebra dimensions differ");
  if (!is_cocycle(L0, alpha)) throw Error(ErrorCode::NotACocycle, "alpha fails the cocycle identity");
  const std::size_t N = n + 1;
  std::vector<Rational> t(N * N * N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) t[(i * N + j) * N + k] = L0.constant(i, j, k);
      t[(i * N + j) * N + n] = alpha.matrix()(i, j);
    }
  auto labels = L0.labels();
  labels.push_back(z_label);
  return LieAlgebra::from_table(std::move(labels), std::move(t));
}

Cocycle2 cocycle_from_derivation(const SymBilinearForm& B0, const Derivation& D0) {
  if (D0.rows() != B0.dim() || D0.cols() != B0.dim())
    throw Error(ErrorCode::DimensionMismatch, "derivation and form dimensions differ");
  Matrix a = D0.transpose() * B0.matrix();
  if (!a.is_antisymmetric()) throw Error(ErrorCode::InvalidData, "derivation is not skew with respect to the form");
  return Cocycle2(std::move(a));
}

Derivation derivation_from_cocycle(const LieAlgebra& L0, const SymBilinearForm& B0, const Cocycle2& alpha) {
  if (B0.dim() != L0.dim() || alpha.dim() != L0.dim())
    throw Error(ErrorCode::DimensionMismatch, "cocycle, form and algebra dimensions differ");
  auto inv = inverse(B0.matrix());
  if (!inv) throw Error(ErrorCode::DegenerateForm, "form is degenerate");
  // D^T B = alpha and B symmetric give D = B^{-1} alpha^T = -B^{-1} alpha.
  Derivation d = -(*inv * alpha.matrix());
  if (!is_derivation(L0, d)) throw Error(ErrorCode::NotACocycle, "induced map is not a derivation");
  return d;
}

LieAlgebra extend_by_derivation(const LieAlgebra& L0, const Derivation& D0, const std::string& d_label) {
  const std::size_t n = L0.dim();
  if (D0.rows() != n || D0.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "derivation and algebra dimensions differ");
  if (!is_derivation(L0, D0)) throw Error(ErrorCode::NotADerivation, "matrix violates the Leibniz rule");
  const std::size_t N = n + 1;
  std::vector<Rational> t(N * N * N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t[(i * N + j) * N + k] = L0.constant(i, j, k);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      t[(n * N + j) * N + k] = D0(k, j);
      t[(j * N + n) * N + k] = -D0(k, j);
    }
  auto labels = L0.labels();
  labels.push_back(d_label);
  return LieAlgebra::from_table(std::move(labels), std::move(t));
}

void DoubleExtensionData::validate() const {
  const std::size_t n = base.dim();
  if (form.dim() != n) throw Error(ErrorCode::InvalidData, "form dimension differs from the base algebra");
  if (der.rows() != n || der.cols() != n)
    throw Error(ErrorCode::InvalidData, "derivation dimension differs from the base algebra");
  if (!is_nondegenerate(form)) throw Error(ErrorCode::InvalidData, "form is degenerate");
  if (!is_invariant(base, form)) throw Error(ErrorCode::InvalidData, "form is not ad-invariant");
  if (!is_skew(form, der)) throw Error(ErrorCode::InvalidData, "derivation is not skew-symmetric");
  if (!is_derivation(base, der)) throw Error(ErrorCode::InvalidData, "matrix is not a derivation");
}

DoubleExtension double_extend(const DoubleExtensionData& data) {
  data.validate();
  const std::size_t n = data.base.dim();
  const std::size_t N = n + 2;
  const std::size_t z = n, d = n + 1;
  const Matrix alpha = cocycle_from_derivation(data.form, data.der).matrix();
  const Matrix& D0 = data.der;
  std::vector<Rational> t(N * N * N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) t[(i * N + j) * N + k] = data.base.constant(i, j, k);
      t[(i * N + j) * N + z] = alpha(i, j);
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      t[(d * N + j) * N + k] = D0(k, j);
      t[(j * N + d) * N + k] = -D0(k, j);
    }
  auto labels = data.base.labels();
  labels.push_back("Z");
  labels.push_back("D");

  Matrix g(N, N);
  g.set_block(0, 0, data.form.matrix());
  g(z, d) = 1;
  g(d, z) = 1;
  return DoubleExtension{LieAlgebra::from_table(std::move(labels), std::move(t)), SymBilinearForm(std::move(g)), z, d};
}

}  // namespace liedual
