#include "liedual/structures.hpp"

#include <algorithm>
#include <set>

#include "liedual/error.hpp"

namespace liedual {

namespace {

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix s(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = m(idx[i], idx[j]);
  return s;
}

std::vector<Matrix> matrices(const FormFamily& fam) {
  std::vector<Matrix> out;
  for (const auto& b : fam.basis) out.push_back(b.matrix());
  return out;
}

Matrix combine(const std::vector<Matrix>& fam, const std::vector<Rational>& c, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (sgn(c[i]) != 0) m += c[i] * fam[i];
  return m;
}

// Members of span(fam) whose coefficient vector satisfies the given linear
// constraints, as a new basis.
std::vector<Matrix> constrained(const std::vector<Matrix>& fam, const std::vector<Vector>& constraints, std::size_t n) {
  RowReducer r(fam.size());
  for (const auto& c : constraints)
    if (!is_zero(c)) r.add(c);
  std::vector<Matrix> out;
  for (const auto& c : r.nullspace()) out.push_back(combine(fam, c, n));
  return out;
}

// Common kernel of all members of the family.
Subspace common_kernel(const std::vector<Matrix>& fam, std::size_t n) {
  if (fam.empty()) return Subspace::whole(n);
  std::vector<Vector> rows;
  for (const auto& m : fam)
    for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row(i));
  return Subspace::span(n, nullspace(Matrix::from_rows(rows, n)));
}

// Constraints "M v = 0" on the family coefficients.
std::vector<Vector> kernel_constraints(const std::vector<Matrix>& fam, const Vector& v, std::size_t n) {
  std::vector<Vector> rows(n, Vector(fam.size()));
  for (std::size_t i = 0; i < fam.size(); ++i) {
    Vector mv = fam[i] * v;
    for (std::size_t r = 0; r < n; ++r) rows[r][i] = mv[r];
  }
  return rows;
}

// A member whose restriction to the given coordinates is nondegenerate.
std::optional<Matrix> nondegenerate_on(const std::vector<Matrix>& fam, const std::vector<std::size_t>& idx,
                                       std::size_t n) {
  std::vector<Matrix> pencil;
  for (const auto& m : fam) pencil.push_back(submatrix(m, idx));
  PencilSearch s = find_nondegenerate_member(pencil, idx.size());
  if (!s.coefficients) return std::nullopt;
  return combine(fam, *s.coefficients, n);
}

Vector normalize_line(Vector v) {
  for (const auto& x : v)
    if (sgn(x) != 0) {
      Rational inv = 1 / x;
      for (auto& y : v) y *= inv;
      break;
    }
  return v;
}

void push_line(std::vector<Vector>& lines, const Vector& v) {
  if (is_zero(v)) return;
  Vector u = normalize_line(v);
  if (std::find(lines.begin(), lines.end(), u) == lines.end()) lines.push_back(std::move(u));
}

// Basis vectors of S and their pairwise sums and differences.
std::vector<Vector> candidate_lines(const Subspace& S) {
  std::vector<Vector> lines;
  const auto& b = S.basis();
  for (const auto& v : b) push_line(lines, v);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      push_line(lines, b[i] + b[j]);
      push_line(lines, b[i] - b[j]);
    }
  return lines;
}

Matrix basis_matrix(const std::vector<Vector>& cols, std::size_t n) { return Matrix::from_columns(cols, n); }

Matrix invert(const Matrix& m, const char* what) {
  auto inv = inverse(m);
  if (!inv) throw Error(ErrorCode::StructureInvalid, what);
  return *inv;
}

}  // namespace

std::optional<std::string> bargmannian_violation(const LieAlgebra& L, const BargmannianStructure& s) {
  const std::size_t n = L.dim();
  if (s.form.dim() != n || s.z.size() != n) return "dimension mismatch";
  if (is_zero(s.z)) return "z is zero";
  if (!center(L).contains(s.z)) return "z is not central";
  if (!is_nondegenerate(s.form)) return "form is degenerate";
  if (!is_invariant(L, s.form)) return "form is not ad-invariant";
  if (sgn(s.form(s.z, s.z)) != 0) return "z is not null";
  return std::nullopt;
}

std::optional<std::string> carrollian_violation(const LieAlgebra& L, const CarrollianStructure& s) {
  const std::size_t n = L.dim();
  if (s.h.dim() != n || s.z.size() != n) return "dimension mismatch";
  if (n < 2) return "quotient metric would live on a zero-dimensional space";
  if (is_zero(s.z)) return "z is zero";
  if (!center(L).contains(s.z)) return "z is not central";
  if (!is_invariant(L, s.h)) return "h is not ad-invariant";
  if (radical(s.h) != Subspace::span(n, {s.z})) return "radical of h is not span(z)";
  return std::nullopt;
}

bool is_coadjoint_invariant(const LieAlgebra& L, const SymBilinearForm& gamma) {
  if (gamma.dim() != L.dim()) return false;
  for (std::size_t w = 0; w < L.dim(); ++w) {
    Matrix a = ad_basis(L, w);
    if (!(a * gamma.matrix() + gamma.matrix() * a.transpose()).is_zero()) return false;
  }
  return true;
}

FormFamily invariant_dual_forms(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const std::size_t N = n * (n + 1) / 2;
  std::vector<std::size_t> index(n * n);
  {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) index[i * n + j] = index[j * n + i] = c++;
  }
  RowReducer eqs(N);
  for (std::size_t w = 0; w < n; ++w) {
    Matrix a = ad_basis(L, w);
    if (a.is_zero()) continue;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y) {
        Vector row(N);
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(a(x, k)) != 0) row[index[k * n + y]] += a(x, k);
          if (sgn(a(y, k)) != 0) row[index[x * n + k]] += a(y, k);
        }
        if (!is_zero(row)) eqs.add(std::move(row));
      }
  }
  FormFamily fam;
  fam.dim = n;
  for (const auto& v : eqs.nullspace()) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = v[index[i * n + j]];
    fam.basis.emplace_back(std::move(m));
  }
  return fam;
}

Subspace invariant_covectors(const LieAlgebra& L) {
  Subspace d = derived_subalgebra(L);
  if (d.dim() == 0) return Subspace::whole(L.dim());
  return Subspace::span(L.dim(), nullspace(Matrix::from_rows(d.basis(), L.dim())));
}

std::optional<std::string> galilean_violation(const LieAlgebra& L, const GalileanStructure& s) {
  const std::size_t n = L.dim();
  if (s.gamma.dim() != n || s.tau.size() != n) return "dimension mismatch";
  if (n < 2) return "quotient metric would live on a zero-dimensional space";
  if (is_zero(s.tau.coords)) return "tau is zero";
  if (!invariant_covectors(L).contains(s.tau.coords)) return "tau does not vanish on the derived subalgebra";
  if (!is_coadjoint_invariant(L, s.gamma)) return "gamma is not invariant";
  if (radical(s.gamma) != Subspace::span(n, {s.tau.coords})) return "radical of gamma is not span(tau)";
  return std::nullopt;
}

std::optional<std::string> leibnizian_violation(const LieAlgebra& L, const LeibnizianStructure& s) {
  const std::size_t n = L.dim();
  if (s.h.dim() != n || s.z.size() != n || s.psi.size() != n) return "dimension mismatch";
  if (is_zero(s.z)) return "z is zero";
  if (!center(L).contains(s.z)) return "z is not central";
  if (is_zero(s.psi.coords)) return "psi is zero";
  if (!invariant_covectors(L).contains(s.psi.coords)) return "psi does not vanish on the derived subalgebra";
  if (sgn(s.psi(s.z)) != 0) return "psi(z) is nonzero";
  Subspace K = Subspace::span(n, nullspace(Matrix::from_rows({s.psi.coords}, n)));
  for (std::size_t w = 0; w < n; ++w) {
    Matrix a = ad_basis(L, w);
    for (const auto& x : K.basis()) {
      Vector wx = a * x;
      for (const auto& y : K.basis())
        if (sgn(s.h(wx, y) + s.h(x, a * y)) != 0) return "h is not invariant on ker psi";
    }
  }
  SymBilinearForm hk = restrict(s.h, K);
  Subspace rad = radical(hk);
  std::vector<Vector> lifted;
  for (const auto& c : rad.basis()) {
    Vector v = zero_vector(n);
    for (std::size_t i = 0; i < c.size(); ++i) v = v + c[i] * K.basis()[i];
    lifted.push_back(std::move(v));
  }
  if (Subspace::span(n, lifted) != Subspace::span(n, {s.z})) return "radical of h on ker psi is not span(z)";
  return std::nullopt;
}

bool verify_bargmannian(const LieAlgebra& L, const BargmannianStructure& s) { return !bargmannian_violation(L, s); }
bool verify_carrollian(const LieAlgebra& L, const CarrollianStructure& s) { return !carrollian_violation(L, s); }
bool verify_galilean(const LieAlgebra& L, const GalileanStructure& s) { return !galilean_violation(L, s); }
bool verify_leibnizian(const LieAlgebra& L, const LeibnizianStructure& s) { return !leibnizian_violation(L, s); }

std::vector<BargmannianStructure> find_bargmannian(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<BargmannianStructure> out;
  if (n == 0) return out;
  std::vector<Matrix> fam = matrices(invariant_sym_forms(L));
  if (fam.empty() || common_kernel(fam, n).dim() > 0) return out;
  Subspace C = center(L);
  if (C.dim() == 0) return out;

  std::vector<Vector> lines = candidate_lines(C);
  if (auto metric = find_invariant_metric(L)) {
    // Null lines of a known metric on the center.
    SymBilinearForm g = restrict(*metric, C);
    const auto& b = C.basis();
    Subspace grad = radical(g);
    for (const auto& r : grad.basis()) {
      Vector v = zero_vector(n);
      for (std::size_t i = 0; i < r.size(); ++i) v = v + r[i] * b[i];
      push_line(lines, v);
    }
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        const Matrix& m = g.matrix();
        Polynomial q({m(i, i), 2 * m(i, j), m(j, j)});
        for (const auto& [t, mult] : rational_roots(q)) push_line(lines, b[i] + t * b[j]);
      }
  }

  for (const auto& z : lines) {
    Vector cons(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) cons[i] = dot(z, fam[i] * z);
    std::vector<Matrix> sub = constrained(fam, {cons}, n);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    auto m = nondegenerate_on(sub, all, n);
    if (!m) continue;
    BargmannianStructure s{SymBilinearForm(*m), z};
    if (verify_bargmannian(L, s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<CarrollianStructure> find_carrollian(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<CarrollianStructure> out;
  if (n < 2) return out;
  std::vector<Matrix> fam = matrices(invariant_sym_forms(L));
  Subspace C = center(L);
  Subspace K = common_kernel(fam, n);
  std::vector<Vector> lines;
  if (K.dim() >= 2) return out;
  if (K.dim() == 1) {
    if (!C.contains(K.basis()[0])) return out;
    push_line(lines, K.basis()[0]);
  } else {
    lines = candidate_lines(C);
  }
  for (const auto& z : lines) {
    std::vector<Matrix> sub = constrained(fam, kernel_constraints(fam, z, n), n);
    auto m = nondegenerate_on(sub, Subspace::span(n, {z}).complement_indices(), n);
    if (!m) continue;
    CarrollianStructure s{z, SymBilinearForm(*m)};
    if (verify_carrollian(L, s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<GalileanStructure> find_galilean(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<GalileanStructure> out;
  if (n < 2) return out;
  std::vector<Matrix> fam = matrices(invariant_dual_forms(L));
  Subspace T = invariant_covectors(L);
  Subspace K = common_kernel(fam, n);
  std::vector<Vector> lines;
  if (K.dim() >= 2 || T.dim() == 0) return out;
  if (K.dim() == 1) {
    if (!T.contains(K.basis()[0])) return out;
    push_line(lines, K.basis()[0]);
  } else {
    lines = candidate_lines(T);
  }
  for (const auto& tau : lines) {
    std::vector<Matrix> sub = constrained(fam, kernel_constraints(fam, tau, n), n);
    auto m = nondegenerate_on(sub, Subspace::span(n, {tau}).complement_indices(), n);
    if (!m) continue;
    GalileanStructure s{Covector{tau}, SymBilinearForm(*m)};
    if (verify_galilean(L, s)) out.push_back(std::move(s));
  }
  return out;
}

BargmannReduction reduce_bargmannian(const LieAlgebra& L, const BargmannianStructure& s) {
  if (auto why = bargmannian_violation(L, s)) throw Error(ErrorCode::StructureInvalid, *why);
  const std::size_t n = L.dim();
  const SymBilinearForm& B = s.form;
  const Vector& Z = s.z;

  Subspace zperp = orthogonal_complement(B, Subspace::span(n, {Z}));
  const std::size_t p = zperp.complement_indices().at(0);
  Vector D = unit_vector(n, p);
  D = (1 / B(D, Z)) * D;
  D = D - (B(D, D) / 2) * Z;

  Subspace lifts = orthogonal_complement(B, Subspace::span(n, {Z, D}));
  const std::size_t m = lifts.dim();
  std::vector<Vector> cols = lifts.basis();
  cols.push_back(Z);
  cols.push_back(D);
  Matrix P = basis_matrix(cols, n);
  Matrix Pinv = invert(P, "reduction basis is singular");

  std::vector<Rational> t(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector c = Pinv * bracket(L, cols[i], cols[j]);
      for (std::size_t k = 0; k < m; ++k) t[(i * m + j) * m + k] = c[k];
    }
  Matrix D0(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    Vector c = Pinv * bracket(L, D, cols[i]);
    for (std::size_t k = 0; k < m; ++k) D0(k, i) = c[k];
  }
  std::vector<std::string> labels;
  // keep the original label when a lift is a basis vector
  for (std::size_t i = 0; i < m; ++i) {
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < n; ++k) {
      if (cols[i][k] == 0) continue;
      if (hit || cols[i][k] != 1) {
        hit.reset();
        break;
      }
      hit = k;
    }
    labels.push_back(hit ? L.labels()[*hit] : "X" + std::to_string(i + 1));
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != m)
    labels = LieAlgebra::default_labels(m, "X");
  DoubleExtensionData data{LieAlgebra::from_table(std::move(labels), std::move(t)), gram(B, lifts.basis()), D0};
  try {
    data.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::StructureInvalid, std::string("reduced data invalid: ") + e.what());
  }
  BargmannReduction out{std::move(data), LinearMap(P)};
  DoubleExtension E = double_extend(out.data);
  if (!is_isomorphism(out.basis_map, E.algebra, L) || P.transpose() * B.matrix() * P != E.form.matrix())
    throw Error(ErrorCode::StructureInvalid, "reduction does not reproduce the algebra");
  return out;
}

CarrollAlgebra carroll_ideal(const DoubleExtension& E) {
  const std::size_t N = E.algebra.dim();
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < N; ++i)
    if (i != E.d_index) vs.push_back(unit_vector(N, i));
  Subspace S = Subspace::span(N, vs);
  Subalgebra sub = subalgebra(E.algebra, S);
  CarrollianStructure cs{S.coordinates(unit_vector(N, E.z_index)), restrict(E.form, S)};
  return {std::move(sub.algebra), std::move(cs)};
}

GalileanAlgebra galilei_quotient(const DoubleExtension& E) {
  const std::size_t N = E.algebra.dim();
  Subspace zline = Subspace::span(N, {unit_vector(N, E.z_index)});
  Quotient q = quotient_by_ideal(E.algebra, zline);
  const auto comp = zline.complement_indices();
  const std::size_t m = comp.size();
  std::vector<std::size_t> base;
  std::size_t dpos = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (comp[i] == E.d_index)
      dpos = i;
    else
      base.push_back(i);
  }
  Matrix B0 = submatrix(E.form.matrix(), [&] {
    std::vector<std::size_t> idx;
    for (auto i : base) idx.push_back(comp[i]);
    return idx;
  }());
  Matrix B0inv = invert(B0, "base form is degenerate");
  Matrix G(m, m);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j) G(base[i], base[j]) = B0inv(i, j);
  Covector tau{unit_vector(m, dpos)};
  return {std::move(q.algebra), GalileanStructure{std::move(tau), SymBilinearForm(std::move(G))}};
}

namespace {

struct CarrollReduction {
  Quotient quotient;
  SymBilinearForm b0;
  Derivation d0;
  Matrix basis;     // columns: complement sections, then z
  Matrix inverse;
};

CarrollReduction carroll_reduce(const LieAlgebra& L, const CarrollianStructure& s) {
  const std::size_t n = L.dim();
  Subspace zline = Subspace::span(n, {s.z});
  Quotient q = quotient_by_ideal(L, zline);
  const std::size_t m = n - 1;
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < m; ++i) cols.push_back(q.section.matrix().column(i));
  std::vector<Vector> sections = cols;
  cols.push_back(s.z);
  Matrix P = basis_matrix(cols, n);
  Matrix Pinv = invert(P, "carrollian basis is singular");
  SymBilinearForm b0 = gram(s.h, sections);
  Matrix alpha(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) alpha(i, j) = (Pinv * bracket(L, sections[i], sections[j]))[m];
  Derivation d0;
  try {
    d0 = derivation_from_cocycle(q.algebra, b0, Cocycle2(alpha));
  } catch (const Error& e) {
    throw Error(ErrorCode::StructureInvalid, std::string("cannot recover the derivation: ") + e.what());
  }
  return {std::move(q), std::move(b0), std::move(d0), std::move(P), std::move(Pinv)};
}

}  // namespace

CarrollToGalilei carroll_to_galilei(const LieAlgebra& L, const CarrollianStructure& s) {
  if (auto why = carrollian_violation(L, s)) throw Error(ErrorCode::StructureInvalid, *why);
  CarrollReduction r = carroll_reduce(L, s);
  DoubleExtensionData data{r.quotient.algebra, r.b0, r.d0};
  DoubleExtension E = double_extend(data);
  CarrollToGalilei out{galilei_quotient(E), std::move(data), LinearMap(r.inverse)};
  if (!is_isomorphism(out.input_map, L, carroll_ideal(E).algebra))
    throw Error(ErrorCode::StructureInvalid, "carrollian reduction does not reproduce the algebra");
  return out;
}

GalileiToCarroll galilei_to_carroll(const LieAlgebra& L, const GalileanStructure& s) {
  const std::size_t n = L.dim();
  if (s.tau.size() != n) throw Error(ErrorCode::StructureInvalid, "dimension mismatch");
  Subspace ker = Subspace::span(n, nullspace(Matrix::from_rows({s.tau.coords}, n)));
  auto comp = ker.complement_indices();
  if (comp.size() != 1) throw Error(ErrorCode::StructureInvalid, "tau is zero");
  return galilei_to_carroll(L, s, unit_vector(n, comp[0]));
}

GalileiToCarroll galilei_to_carroll(const LieAlgebra& L, const GalileanStructure& s, const Vector& d) {
  if (auto why = galilean_violation(L, s)) throw Error(ErrorCode::StructureInvalid, *why);
  const std::size_t n = L.dim();
  if (d.size() != n || sgn(s.tau(d)) == 0) throw Error(ErrorCode::StructureInvalid, "tau(d) must be nonzero");
  const Vector D = (1 / s.tau(d)) * d;
  Subspace ker = Subspace::span(n, nullspace(Matrix::from_rows({s.tau.coords}, n)));
  Subalgebra g0 = subalgebra(L, ker);
  const std::size_t m = ker.dim();

  std::vector<Vector> cols = ker.basis();
  cols.push_back(D);
  Matrix P = basis_matrix(cols, n);
  Matrix Pinv = invert(P, "galilean basis is singular");
  Matrix G = Pinv * s.gamma.matrix() * Pinv.transpose();
  Matrix B0 = invert(G.block(0, 0, m, m), "gamma is degenerate on the dual of ker tau");
  Matrix D0(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    Vector c = Pinv * bracket(L, D, ker.basis()[i]);
    for (std::size_t k = 0; k < m; ++k) D0(k, i) = c[k];
  }
  DoubleExtensionData data{std::move(g0.algebra), SymBilinearForm(std::move(B0)), std::move(D0)};
  DoubleExtension E;
  try {
    E = double_extend(data);
  } catch (const Error& e) {
    throw Error(ErrorCode::StructureInvalid, std::string("split data invalid: ") + e.what());
  }
  GalileiToCarroll out{carroll_ideal(E), std::move(data), LinearMap(Pinv)};
  if (!is_isomorphism(out.input_map, L, galilei_quotient(E).algebra))
    throw Error(ErrorCode::StructureInvalid, "galilean splitting does not reproduce the algebra");
  return out;
}

LeibnizDecomposition leibniz_decompose(const LieAlgebra& L, const LeibnizianStructure& s) {
  if (auto why = leibnizian_violation(L, s)) throw Error(ErrorCode::StructureInvalid, *why);
  const std::size_t n = L.dim();
  Subspace ker = Subspace::span(n, nullspace(Matrix::from_rows({s.psi.coords}, n)));
  Subalgebra K = subalgebra(L, ker);
  CarrollianStructure cs{ker.coordinates(s.z), restrict(s.h, ker)};
  if (auto why = carrollian_violation(K.algebra, cs))
    throw Error(ErrorCode::StructureInvalid, "ker psi is not carrollian: " + *why);
  CarrollReduction r = carroll_reduce(K.algebra, cs);
  const std::size_t m = r.d0.rows();

  // D with psi(D) = 1 from the echelon complement of ker psi.
  const std::size_t p = ker.complement_indices().at(0);
  Vector D = (1 / s.psi.coords[p]) * unit_vector(n, p);
  Matrix dbar(m, m);
  std::vector<Vector> lifts;
  for (std::size_t i = 0; i < m; ++i) lifts.push_back(K.inclusion(r.basis.column(i)));
  for (std::size_t i = 0; i < m; ++i) {
    Vector c = r.inverse * ker.coordinates(bracket(L, D, lifts[i]));
    for (std::size_t k = 0; k < m; ++k) dbar(k, i) = c[k];
  }

  LeibnizDecomposition out;
  out.carroll = {K.algebra, cs};
  out.kernel_inclusion = K.inclusion;
  out.metric = DoubleExtensionData{r.quotient.algebra, r.b0, r.d0};
  out.d0 = r.d0;
  out.dbar0 = dbar;
  if (!is_skew(r.b0, dbar) || !is_derivation(r.quotient.algebra, dbar))
    throw Error(ErrorCode::StructureInvalid, "ad_D does not induce a skew-symmetric derivation");

  LieAlgebra gbar = extend_by_derivation(r.quotient.algebra, dbar);
  Matrix G(m + 1, m + 1);
  G.set_block(0, 0, invert(r.b0.matrix(), "quotient metric is degenerate"));
  out.galilean = {gbar, GalileanStructure{Covector{unit_vector(m + 1, m)}, SymBilinearForm(std::move(G))}};

  // Basis (lifts, z, D) of L; dropping the z coordinate projects onto gbar.
  std::vector<Vector> cols = lifts;
  cols.push_back(s.z);
  cols.push_back(D);
  Matrix M = invert(basis_matrix(cols, n), "leibnizian basis is singular");
  Matrix proj(m + 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) proj(i, j) = M(i, j);
    proj(m, j) = M(m + 1, j);
  }
  out.projection = LinearMap(std::move(proj));
  if (!is_homomorphism(out.projection, L, gbar))
    throw Error(ErrorCode::StructureInvalid, "quotient by z does not match the induced derivation");

  out.d0_char = characteristic_polynomial(out.d0);
  out.dbar0_char = characteristic_polynomial(out.dbar0);
  out.same_char_poly = out.d0_char == out.dbar0_char;
  out.bargmannian = find_bargmannian(L);
  out.invariant_metric = find_invariant_metric(L);
  return out;
}

}  // namespace liedual
