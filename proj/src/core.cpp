#include "liedual/core.hpp"

#include <algorithm>

#include "liedual/error.hpp"

namespace liedual {

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Echelon e = rref(Matrix::from_rows(vectors, ambient));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.basis_.push_back(e.reduced.row(i));
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector not in ambient space");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational f = r[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(basis_[i][j]) != 0) r[j] -= f * basis_[i][j];
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& s) const {
  for (const auto& v : s.basis_)
    if (!contains(v)) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(ErrorCode::InvalidData, "vector does not lie in the subspace");
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  const std::size_t a = dim(), b = other.dim();
  if (a == 0 || b == 0) return Subspace(ambient_);
  Matrix m(ambient_, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, a + j) = -other.basis_[j][r];
  std::vector<Vector> vs;
  for (const auto& n : nullspace(m)) {
    Vector v(ambient_);
    for (std::size_t i = 0; i < a; ++i)
      if (sgn(n[i]) != 0) v = v + n[i] * basis_[i];
    vs.push_back(std::move(v));
  }
  return span(ambient_, vs);
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

// -------------------------------------------------------------- LieAlgebra

std::vector<std::string> LieAlgebra::default_labels(std::size_t n, const std::string& stem) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets,
                       JacobiCheck check)
    : dim_(labels.size()), labels_(std::move(labels)), table_(dim_ * dim_ * dim_) {
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const auto& b = brackets[e];
    const std::string where = "bracket " + std::to_string(e);
    if (b.x >= dim_ || b.y >= dim_)
      throw Error(ErrorCode::IndexOutOfRange, "bracket index out of range", where);
    if (b.x >= b.y)
      throw Error(ErrorCode::AntisymmetryOrdering, "bracket entries must have x < y", where);
    for (const auto& t : b.terms) {
      if (t.index >= dim_) throw Error(ErrorCode::IndexOutOfRange, "bracket term index out of range", where);
      table_[(b.x * dim_ + b.y) * dim_ + t.index] += t.coeff;
      table_[(b.y * dim_ + b.x) * dim_ + t.index] -= t.coeff;
    }
  }
  if (check == JacobiCheck::Eager) {
    auto bad = check_jacobi(*this);
    if (!bad.empty()) {
      const auto& t = bad.front();
      throw Error(ErrorCode::JacobiViolation, "Jacobi identity fails",
                  "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
    }
  }
}

LieAlgebra LieAlgebra::from_table(std::vector<std::string> labels, std::vector<Rational> table,
                                  JacobiCheck check) {
  LieAlgebra L;
  L.dim_ = labels.size();
  if (table.size() != L.dim_ * L.dim_ * L.dim_)
    throw Error(ErrorCode::DimensionMismatch, "structure constant table has the wrong size");
  L.labels_ = std::move(labels);
  L.table_ = std::move(table);
  const std::size_t n = L.dim_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (L.constant(i, j, k) != -L.constant(j, i, k))
          throw Error(ErrorCode::InvalidData, "structure constants are not antisymmetric");
  if (check == JacobiCheck::Eager) {
    auto bad = check_jacobi(L);
    if (!bad.empty()) {
      const auto& t = bad.front();
      throw Error(ErrorCode::JacobiViolation, "Jacobi identity fails",
                  "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
    }
  }
  return L;
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      BracketEntry e{i, j, {}};
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(constant(i, j, k)) != 0) e.terms.push_back({k, constant(i, j, k)});
      if (!e.terms.empty()) out.push_back(std::move(e));
    }
  return out;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  return Vector(table_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_),
                table_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j + 1) * dim_));
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

// -------------------------------------------------------------- operations

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket argument has wrong length");
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || sgn(y[j]) == 0) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(L.constant(i, j, k)) != 0) r[k] += xy * L.constant(i, j, k);
    }
  }
  return r;
}

Matrix ad(const LieAlgebra& L, const Vector& x) {
  const std::size_t n = L.dim();
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "ad argument has wrong length");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(L.constant(i, j, k)) != 0) m(k, j) += x[i] * L.constant(i, j, k);
  }
  return m;
}

Matrix ad_basis(const LieAlgebra& L, std::size_t i) { return ad(L, unit_vector(L.dim(), i)); }

std::vector<IndexTriple> check_jacobi(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<IndexTriple> bad;
  // [e_a, [e_b, e_c]] accumulated into acc.
  auto add_term = [&](Vector& acc, std::size_t a, std::size_t b, std::size_t c) {
    for (std::size_t l = 0; l < n; ++l) {
      const Rational& f = L.constant(b, c, l);
      if (sgn(f) == 0) continue;
      for (std::size_t m = 0; m < n; ++m)
        if (sgn(L.constant(a, l, m)) != 0) acc[m] += f * L.constant(a, l, m);
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector acc(n);
        add_term(acc, i, j, k);
        add_term(acc, j, k, i);
        add_term(acc, k, i, j);
        if (!is_zero(acc)) bad.push_back({i, j, k});
      }
  return bad;
}

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // x is central iff sum_i x_i f_{ij}^k = 0 for all j, k.
  RowReducer eqs(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(n);
      bool any = false;
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(L.constant(i, j, k)) != 0) {
          row[i] = L.constant(i, j, k);
          any = true;
        }
      if (any) eqs.add(std::move(row));
    }
  return Subspace::span(n, eqs.nullspace());
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      Vector v = L.bracket_basis(i, j);
      if (!is_zero(v)) vs.push_back(std::move(v));
    }
  return Subspace::span(L.dim(), vs);
}

bool span_is_ideal(const LieAlgebra& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace not in the algebra");
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (const auto& s : S.basis())
      if (!S.contains(bracket(L, unit_vector(L.dim(), i), s))) return false;
  return true;
}

bool span_is_subalgebra(const LieAlgebra& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace not in the algebra");
  const auto& b = S.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!S.contains(bracket(L, b[i], b[j]))) return false;
  return true;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<Rational> t(n * n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) t[(i * n + j) * n + k] = a.constant(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) t[((na + i) * n + na + j) * n + na + k] = b.constant(i, j, k);
  return LieAlgebra::from_table(std::move(labels), std::move(t), JacobiCheck::Deferred);
}

Quotient quotient_by_ideal(const LieAlgebra& L, const Subspace& ideal) {
  if (!span_is_ideal(L, ideal)) throw Error(ErrorCode::NotAnIdeal, "subspace is not an ideal");
  const std::size_t n = L.dim();
  const auto comp = ideal.complement_indices();
  const std::size_t q = comp.size();

  Matrix proj(q, n);
  for (std::size_t a = 0; a < q; ++a) proj(a, comp[a]) = 1;
  for (std::size_t i = 0; i < ideal.dim(); ++i) {
    const std::size_t p = ideal.pivots()[i];
    for (std::size_t a = 0; a < q; ++a) proj(a, p) = -ideal.basis()[i][comp[a]];
  }
  Matrix sec(n, q);
  for (std::size_t a = 0; a < q; ++a) sec(comp[a], a) = 1;

  std::vector<std::string> labels;
  for (auto c : comp) labels.push_back(L.labels()[c]);
  std::vector<Rational> t(q * q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      Vector v = proj * L.bracket_basis(comp[a], comp[b]);
      for (std::size_t c = 0; c < q; ++c) {
        t[(a * q + b) * q + c] = v[c];
        t[(b * q + a) * q + c] = -v[c];
      }
    }
  return {LieAlgebra::from_table(std::move(labels), std::move(t), JacobiCheck::Deferred), LinearMap(proj),
          LinearMap(sec)};
}

Subalgebra subalgebra(const LieAlgebra& L, const Subspace& S) {
  if (!span_is_subalgebra(L, S)) throw Error(ErrorCode::NotASubalgebra, "subspace is not closed under the bracket");
  const auto& b = S.basis();
  const std::size_t m = b.size();
  std::vector<Rational> t(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector c = S.coordinates(bracket(L, b[i], b[j]));
      for (std::size_t k = 0; k < m; ++k) {
        t[(i * m + j) * m + k] = c[k];
        t[(j * m + i) * m + k] = -c[k];
      }
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    // Reuse the ambient label when the basis vector is a standard one.
    const auto& v = b[i];
    std::size_t nonzero = 0;
    for (const auto& x : v) nonzero += sgn(x) != 0;
    labels.push_back(nonzero == 1 ? L.labels()[S.pivots()[i]] : "v" + std::to_string(i + 1));
  }
  return {LieAlgebra::from_table(std::move(labels), std::move(t), JacobiCheck::Deferred),
          LinearMap(Matrix::from_columns(b, L.dim()))};
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& basis, std::vector<std::string> labels) {
  const std::size_t n = L.dim();
  if (basis.rows() != n || basis.cols() != n) throw Error(ErrorCode::DimensionMismatch, "basis matrix has wrong shape");
  auto inv = inverse(basis);
  if (!inv) throw Error(ErrorCode::InvalidData, "basis matrix is singular");
  if (labels.empty()) labels = L.labels();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(basis.column(j));
  std::vector<Rational> t(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector v = *inv * bracket(L, cols[a], cols[b]);
      for (std::size_t c = 0; c < n; ++c) {
        t[(a * n + b) * n + c] = v[c];
        t[(b * n + a) * n + c] = -v[c];
      }
    }
  return LieAlgebra::from_table(std::move(labels), std::move(t), JacobiCheck::Deferred);
}

bool is_homomorphism(const LinearMap& phi, const LieAlgebra& from, const LieAlgebra& to) {
  if (phi.source_dim() != from.dim() || phi.target_dim() != to.dim()) return false;
  std::vector<Vector> images;
  for (std::size_t j = 0; j < from.dim(); ++j) images.push_back(phi.matrix().column(j));
  for (std::size_t i = 0; i < from.dim(); ++i)
    for (std::size_t j = i + 1; j < from.dim(); ++j)
      if (phi(from.bracket_basis(i, j)) != bracket(to, images[i], images[j])) return false;
  return true;
}

bool is_isomorphism(const LinearMap& phi, const LieAlgebra& from, const LieAlgebra& to) {
  return from.dim() == to.dim() && rank(phi.matrix()) == from.dim() && is_homomorphism(phi, from, to);
}

Matrix killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_basis(L, i));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational tr;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (sgn(ads[i](a, b)) != 0 && sgn(ads[j](b, a)) != 0) tr += ads[i](a, b) * ads[j](b, a);
      k(i, j) = tr;
      k(j, i) = tr;
    }
  return k;
}

}  // namespace liedual
