#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "liedual/structures.hpp"

namespace liedual {

struct ReductiveSplit {
  Subspace ss;  // derived subalgebra
  Subspace a;   // center
};

/// Requires B0 positive definite and invariant; throws NotReductive otherwise
/// or if L0 is not the B0-orthogonal direct sum of ss and a.
ReductiveSplit reductive_decompose(const LieAlgebra& L0, const SymBilinearForm& B0);

struct KernelSplit {
  Subspace a0;   // ker D0
  Subspace a1;   // orthogonal complement of a0
  Matrix omega;  // omega(i, j) = <D0 a1_i, a1_j> on the echelon basis of a1
};

/// B is a euclidean form on the abelian block and D0 is skew for it.
KernelSplit split_kernel(const SymBilinearForm& B, const Matrix& D0);

/// Decomposition of a semisimple algebra into simple ideals, via the
/// eigenspaces of a generic element of its centroid. Factors whose centroid
/// is not split over Q are returned unsplit.
std::vector<Subspace> simple_factors(const LieAlgebra& L);

struct SimpleFactor {
  std::size_t dim = 0;
  Rational lambda;  // form = lambda * (-Killing) on the factor
  bool operator==(const SimpleFactor&) const = default;
  auto operator<=>(const SimpleFactor& o) const {
    if (dim != o.dim) return dim <=> o.dim;
    return lambda < o.lambda ? std::strong_ordering::less
                             : (lambda == o.lambda ? std::strong_ordering::equal : std::strong_ordering::greater);
  }
};

struct ClassificationData {
  std::vector<SimpleFactor> semisimple;  // sorted
  std::size_t a0_dim = 0;
  std::size_t a1_dim = 0;
  Matrix omega;
  Polynomial char_poly;  // of D0 restricted to a1

  /// Same isomorphism class: descriptors, a0_dim and char_poly agree.
  bool same_class(const ClassificationData& other) const;
  /// Sorted, line-oriented text record suitable for hashing and diffing.
  std::string canonical_record() const;
};

ClassificationData canonical_data(const DoubleExtensionData& data);
ClassificationData canonical_data(const DoubleExtension& E);

/// Skew-eigenvalues mu_1 >= ... >= mu_n > 0 when char_poly = prod (t^2 + mu_i^2)
/// with every mu_i rational; nullopt otherwise.
std::optional<std::vector<Rational>> exact_skew_eigenvalues(const Polynomial& char_poly);
/// Numeric skew-eigenvalues, each within tol of the true value, descending.
/// Throws InvalidData if char_poly is not of the form prod (t^2 + mu_i^2).
std::vector<double> numeric_skew_eigenvalues(const Polynomial& char_poly, double tol = 1e-9);

/// Basis (e1..e2n, Z, D), base form I, D0 = blocks [[0, -mu_j], [mu_j, 0]].
/// Throws InvalidData unless mu is positive and descending.
DoubleExtension nappi_witten(const std::vector<Rational>& mu);

/// Block matrix sum_j mu_j theta^{2j-1} ∧ theta^{2j}.
Matrix symplectic_blocks(const std::vector<Rational>& mu);

/// [A, B] = omega(A, B) Z on (e1..e2n, Z). Throws InvalidData or DegenerateForm.
LieAlgebra heisenberg(const Matrix& omega);

/// abelian(m) extended by the skew map D0, tau = theta^D, gamma = I ⊕ 0.
GalileanAlgebra galilean_extension_algebra(const Matrix& D0);

}  // namespace liedual
