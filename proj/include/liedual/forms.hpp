#pragma once

#include <optional>
#include <vector>

#include "liedual/core.hpp"

namespace liedual {

/// Symmetric bilinear form, B(x, y) = x^T M y.
class SymBilinearForm {
 public:
  SymBilinearForm() = default;
  /// Throws InvalidData if the matrix is not square and symmetric.
  explicit SymBilinearForm(Matrix m);

  static SymBilinearForm zero(std::size_t n) { return SymBilinearForm(Matrix(n, n)); }
  static SymBilinearForm identity(std::size_t n) { return SymBilinearForm(Matrix::identity(n)); }

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Rational operator()(const Vector& x, const Vector& y) const;
  /// x -> B(x, -)
  Covector flat(const Vector& x) const;

  bool operator==(const SymBilinearForm&) const = default;

 private:
  Matrix m_;
};

SymBilinearForm direct_sum(const SymBilinearForm& a, const SymBilinearForm& b);

/// Linearly independent forms spanning a family; members are
/// coefficient combinations of the basis.
struct FormFamily {
  std::size_t dim = 0;
  std::vector<SymBilinearForm> basis;

  std::size_t size() const { return basis.size(); }
  SymBilinearForm member(const std::vector<Rational>& coeffs) const;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  bool operator==(const Signature&) const = default;
};

/// B([w, x], y) + B(x, [w, y]) = 0 for all basis triples.
bool is_invariant(const LieAlgebra& L, const SymBilinearForm& B);
FormFamily invariant_sym_forms(const LieAlgebra& L);

Subspace radical(const SymBilinearForm& B);
bool is_nondegenerate(const SymBilinearForm& B);
Signature signature(const SymBilinearForm& B);
/// Gram matrix on the echelon basis of S.
SymBilinearForm restrict(const SymBilinearForm& B, const Subspace& S);
/// Gram matrix of B on an explicit list of vectors.
SymBilinearForm gram(const SymBilinearForm& B, const std::vector<Vector>& vectors);
Subspace orthogonal_complement(const SymBilinearForm& B, const Subspace& S);

/// How a nondegeneracy search over a linear family of matrices concluded.
enum class SearchCertificate {
  Witness,        // a nondegenerate member was found
  EmptyFamily,    // the family is {0} on a nonzero space
  CommonKernel,   // every member annihilates a common nonzero vector
  GridExhausted,  // det vanishes on a grid exceeding its per-variable degree
  Inconclusive,   // grid too large to enumerate and no witness found
};

struct PencilSearch {
  std::optional<std::vector<Rational>> coefficients;  // witness combination
  SearchCertificate certificate = SearchCertificate::Inconclusive;
};

/// Looks for coefficients c with det(sum c_i M_i) != 0. The determinant has
/// degree at most rank(M_i) in c_i, so vanishing on a grid of side
/// rank(M_i) + 1 in each direction proves it vanishes identically.
PencilSearch find_nondegenerate_member(const std::vector<Matrix>& pencil, std::size_t n,
                                       std::size_t grid_budget = 200000);

/// A nondegenerate ad-invariant form, if one exists and the search certifies it.
std::optional<SymBilinearForm> find_invariant_metric(const LieAlgebra& L);

struct MetricSearch {
  std::optional<SymBilinearForm> metric;
  SearchCertificate certificate;
};
MetricSearch search_invariant_metric(const LieAlgebra& L);

}  // namespace liedual
