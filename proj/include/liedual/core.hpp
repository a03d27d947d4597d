#pragma once

#include <array>
#include <string>
#include <vector>

#include "liedual/matrix.hpp"

namespace liedual {

/// A linear subspace of Q^n, stored by the reduced row-echelon basis of any
/// spanning set. Two subspaces are equal iff their stored bases are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient);
  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Standard basis indices that are not pivots; these vectors span a
  /// complement of the subspace.
  std::vector<std::size_t> complement_indices() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& s) const;
  /// Coordinates of v (which must lie in the subspace) in the stored basis.
  Vector coordinates(const Vector& v) const;

  Subspace intersect(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;

  bool operator==(const Subspace&) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// A linear map Q^source -> Q^target; matrix is target_dim x source_dim.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix m) : matrix_(std::move(m)) {}

  static LinearMap identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }

  std::size_t source_dim() const { return matrix_.cols(); }
  std::size_t target_dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

  Vector operator()(const Vector& v) const { return matrix_ * v; }
  /// (this ∘ first)
  LinearMap after(const LinearMap& first) const { return LinearMap(matrix_ * first.matrix_); }

  bool operator==(const LinearMap&) const = default;

 private:
  Matrix matrix_;
};

struct BracketTerm {
  std::size_t index;
  Rational coeff;
  bool operator==(const BracketTerm&) const = default;
};

/// [e_x, e_y] = sum of coeff * e_index, with x < y.
struct BracketEntry {
  std::size_t x;
  std::size_t y;
  std::vector<BracketTerm> terms;
  bool operator==(const BracketEntry&) const = default;
};

enum class JacobiCheck { Eager, Deferred };

/// A finite-dimensional Lie algebra given by structure constants in a fixed
/// basis. Immutable after construction; the antisymmetry of the bracket is
/// built into the storage.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Throws IndexOutOfRange, AntisymmetryOrdering or JacobiViolation.
  LieAlgebra(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets,
             JacobiCheck check = JacobiCheck::Eager);

  /// Builds from a dense table with table[(i*n + j)*n + k] = f_{ij}^k.
  /// The table must already be antisymmetric in (i, j).
  static LieAlgebra from_table(std::vector<std::string> labels, std::vector<Rational> table,
                               JacobiCheck check = JacobiCheck::Eager);

  /// Labels e1..en.
  static std::vector<std::string> default_labels(std::size_t n, const std::string& stem = "e");

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& table() const { return table_; }

  /// Nonzero brackets with x < y, terms sorted by index.
  std::vector<BracketEntry> brackets() const;

  Vector bracket_basis(std::size_t i, std::size_t j) const;
  bool is_abelian() const;

  /// Same structure constants; labels are ignored.
  bool same_structure(const LieAlgebra& other) const { return dim_ == other.dim_ && table_ == other.table_; }
  bool operator==(const LieAlgebra&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> table_;
};

using IndexTriple = std::array<std::size_t, 3>;

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y);
/// Matrix of ad_x; column j holds [x, e_j].
Matrix ad(const LieAlgebra& L, const Vector& x);
Matrix ad_basis(const LieAlgebra& L, std::size_t i);

/// All basis triples i < j < k on which the Jacobi identity fails.
std::vector<IndexTriple> check_jacobi(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);
Subspace derived_subalgebra(const LieAlgebra& L);
bool span_is_ideal(const LieAlgebra& L, const Subspace& S);
bool span_is_subalgebra(const LieAlgebra& L, const Subspace& S);

/// Basis of L1 first, then of L2; the two factors commute.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

struct Quotient {
  LieAlgebra algebra;
  LinearMap projection;   // L -> L / I
  LinearMap section;      // L / I -> L, onto the chosen complement
};

/// Quotient on the complement spanned by the standard basis vectors whose
/// indices are not pivots of the ideal. Throws NotAnIdeal.
Quotient quotient_by_ideal(const LieAlgebra& L, const Subspace& ideal);

struct Subalgebra {
  LieAlgebra algebra;
  LinearMap inclusion;    // S -> L, columns are the echelon basis of S
};

/// Restriction to a subalgebra, in its echelon basis. Throws NotASubalgebra.
Subalgebra subalgebra(const LieAlgebra& L, const Subspace& S);

/// Structure constants in a new basis whose vectors (in old coordinates) are
/// the columns of the invertible matrix `basis`.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& basis, std::vector<std::string> labels = {});

/// True iff phi (target_dim x source_dim) satisfies phi[x,y] = [phi x, phi y].
bool is_homomorphism(const LinearMap& phi, const LieAlgebra& from, const LieAlgebra& to);
bool is_isomorphism(const LinearMap& phi, const LieAlgebra& from, const LieAlgebra& to);

/// Killing form tr(ad_x ad_y).
Matrix killing_form(const LieAlgebra& L);

}  // namespace liedual
