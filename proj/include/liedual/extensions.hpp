#pragma once

#include <string>

#include "liedual/derivations.hpp"

namespace liedual {

/// Antisymmetric bilinear form alpha(e_i, e_j) = matrix(i, j).
class Cocycle2 {
 public:
  Cocycle2() = default;
  /// Throws InvalidData if the matrix is not antisymmetric.
  explicit Cocycle2(Matrix m);
  static Cocycle2 zero(std::size_t n) { return Cocycle2(Matrix(n, n)); }

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Rational operator()(const Vector& x, const Vector& y) const { return dot(x, m_ * y); }
  bool operator==(const Cocycle2&) const = default;

 private:
  Matrix m_;
};

bool is_cocycle(const LieAlgebra& L, const Cocycle2& alpha);

/// g0 ⊕ RZ with [x, y] = [x, y]_0 + alpha(x, y) Z. Throws NotACocycle.
LieAlgebra central_extend(const LieAlgebra& L0, const Cocycle2& alpha, const std::string& z_label = "Z");

/// alpha(x, y) = B0(D0 x, y).
Cocycle2 cocycle_from_derivation(const SymBilinearForm& B0, const Derivation& D0);
/// The unique D0 with B0(D0 x, y) = alpha(x, y). Throws DegenerateForm, or
/// NotACocycle if the solution is not a derivation.
Derivation derivation_from_cocycle(const LieAlgebra& L0, const SymBilinearForm& B0, const Cocycle2& alpha);

/// g0 ⊕ RD with [D, x] = D0 x. Throws NotADerivation.
LieAlgebra extend_by_derivation(const LieAlgebra& L0, const Derivation& D0, const std::string& d_label = "D");

/// A metric Lie algebra with a skew-symmetric derivation.
struct DoubleExtensionData {
  LieAlgebra base;
  SymBilinearForm form;
  Derivation der;

  /// Throws InvalidData naming the first violated invariant.
  void validate() const;
  bool operator==(const DoubleExtensionData&) const = default;
};

struct DoubleExtension {
  LieAlgebra algebra;
  SymBilinearForm form;
  std::size_t z_index = 0;
  std::size_t d_index = 0;
};

/// Basis (base, Z, D); [x, y] = [x, y]_0 + B0(D0 x, y) Z, [D, x] = D0 x,
/// <D, Z> = 1, <D, D> = 0.
DoubleExtension double_extend(const DoubleExtensionData& data);

}  // namespace liedual
