#include "liedual/forms.hpp"

#include <algorithm>
#include <cstdint>

#include "liedual/error.hpp"

namespace liedual {

SymBilinearForm::SymBilinearForm(Matrix m) : m_(std::move(m)) {
  if (!m_.is_symmetric()) throw Error(ErrorCode::InvalidData, "form matrix is not symmetric");
}

Rational SymBilinearForm::operator()(const Vector& x, const Vector& y) const { return dot(x, m_ * y); }

Covector SymBilinearForm::flat(const Vector& x) const { return Covector{m_ * x}; }

SymBilinearForm direct_sum(const SymBilinearForm& a, const SymBilinearForm& b) {
  return SymBilinearForm(direct_sum(a.matrix(), b.matrix()));
}

SymBilinearForm FormFamily::member(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != basis.size()) throw Error(ErrorCode::DimensionMismatch, "wrong number of coefficients");
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) m += coeffs[i] * basis[i].matrix();
  return SymBilinearForm(std::move(m));
}

bool is_invariant(const LieAlgebra& L, const SymBilinearForm& B) {
  const std::size_t n = L.dim();
  if (B.dim() != n) throw Error(ErrorCode::DimensionMismatch, "form and algebra dimensions differ");
  const Matrix& M = B.matrix();
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y) {
        Rational s;
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(L.constant(w, x, k)) != 0) s += L.constant(w, x, k) * M(k, y);
          if (sgn(L.constant(w, y, k)) != 0) s += L.constant(w, y, k) * M(x, k);
        }
        if (sgn(s) != 0) return false;
      }
  return true;
}

FormFamily invariant_sym_forms(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const std::size_t N = n * (n + 1) / 2;
  std::vector<std::size_t> index(n * n);
  {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) index[i * n + j] = index[j * n + i] = c++;
  }
  RowReducer eqs(N);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y) {
        Vector row(N);
        bool any = false;
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(L.constant(w, x, k)) != 0) {
            row[index[k * n + y]] += L.constant(w, x, k);
            any = true;
          }
          if (sgn(L.constant(w, y, k)) != 0) {
            row[index[x * n + k]] += L.constant(w, y, k);
            any = true;
          }
        }
        if (any) eqs.add(std::move(row));
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

Subspace radical(const SymBilinearForm& B) { return Subspace::span(B.dim(), nullspace(B.matrix())); }

bool is_nondegenerate(const SymBilinearForm& B) { return rank(B.matrix()) == B.dim(); }

Signature signature(const SymBilinearForm& B) {
  Matrix a = B.matrix();
  const std::size_t n = a.rows();
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i) active.push_back(i);
  Signature sig;

  auto erase = [&](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

  while (!active.empty()) {
    std::size_t piv = n;
    for (auto i : active)
      if (sgn(a(i, i)) != 0) {
        piv = i;
        break;
      }
    if (piv != n) {
      const Rational d = a(piv, piv);
      (sgn(d) > 0 ? sig.positive : sig.negative) += 1;
      erase(piv);
      for (auto k : active)
        for (auto l : active)
          if (sgn(a(k, piv)) != 0 && sgn(a(piv, l)) != 0) a(k, l) -= a(k, piv) * a(piv, l) / d;
      continue;
    }
    // All active diagonal entries vanish: split off a hyperbolic pair.
    std::size_t pi = n, pj = n;
    for (std::size_t s = 0; s < active.size() && pi == n; ++s)
      for (std::size_t t = s + 1; t < active.size(); ++t)
        if (sgn(a(active[s], active[t])) != 0) {
          pi = active[s];
          pj = active[t];
          break;
        }
    if (pi == n) {
      sig.zero += active.size();
      break;
    }
    const Rational h = a(pi, pj);
    sig.positive += 1;
    sig.negative += 1;
    erase(pi);
    erase(pj);
    for (auto k : active)
      for (auto l : active) {
        Rational corr = a(k, pi) * a(l, pj) + a(k, pj) * a(l, pi);
        if (sgn(corr) != 0) a(k, l) -= corr / h;
      }
  }
  return sig;
}

SymBilinearForm gram(const SymBilinearForm& B, const std::vector<Vector>& vectors) {
  const std::size_t m = vectors.size();
  Matrix g(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    Vector bi = B.matrix() * vectors[i];
    for (std::size_t j = i; j < m; ++j) {
      g(i, j) = dot(bi, vectors[j]);
      g(j, i) = g(i, j);
    }
  }
  return SymBilinearForm(std::move(g));
}

SymBilinearForm restrict(const SymBilinearForm& B, const Subspace& S) {
  if (S.ambient_dim() != B.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace and form dimensions differ");
  return gram(B, S.basis());
}

Subspace orthogonal_complement(const SymBilinearForm& B, const Subspace& S) {
  if (S.ambient_dim() != B.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace and form dimensions differ");
  if (S.dim() == 0) return Subspace::whole(B.dim());
  std::vector<Vector> rows;
  for (const auto& s : S.basis()) rows.push_back(B.matrix() * s);
  return Subspace::span(B.dim(), nullspace(Matrix::from_rows(rows, B.dim())));
}

PencilSearch find_nondegenerate_member(const std::vector<Matrix>& pencil, std::size_t n, std::size_t grid_budget) {
  const std::size_t k = pencil.size();
  PencilSearch out;
  if (n == 0) {
    out.coefficients = std::vector<Rational>(k);
    out.certificate = SearchCertificate::Witness;
    return out;
  }
  if (k == 0) {
    out.certificate = SearchCertificate::EmptyFamily;
    return out;
  }

  {
    std::vector<Vector> rows;
    for (const auto& m : pencil)
      for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row(i));
    if (!nullspace(Matrix::from_rows(rows, n)).empty()) {
      out.certificate = SearchCertificate::CommonKernel;
      return out;
    }
  }

  auto combine = [&](const std::vector<Rational>& c) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < k; ++i)
      if (sgn(c[i]) != 0) m += c[i] * pencil[i];
    return m;
  };
  auto try_point = [&](const std::vector<Rational>& c) {
    if (sgn(determinant(combine(c))) == 0) return false;
    out.coefficients = c;
    out.certificate = SearchCertificate::Witness;
    return true;
  };

  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> c(k);
    c[i] = 1;
    if (try_point(c)) return out;
  }
  if (try_point(std::vector<Rational>(k, Rational(1)))) return out;
  // Deterministic small-integer probes.
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  for (int attempt = 0; attempt < 24; ++attempt) {
    std::vector<Rational> c(k);
    for (auto& x : c) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      x = static_cast<long>((state >> 33) % 7) - 3;
    }
    if (try_point(c)) return out;
  }

  std::vector<std::size_t> degree(k);
  double total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    degree[i] = rank(pencil[i]);
    total *= static_cast<double>(degree[i] + 1);
  }
  if (total > static_cast<double>(grid_budget)) {
    out.certificate = SearchCertificate::Inconclusive;
    return out;
  }
  std::vector<std::size_t> odo(k, 0);
  while (true) {
    std::vector<Rational> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<unsigned long>(odo[i]);
    if (try_point(c)) return out;
    std::size_t i = 0;
    while (i < k && odo[i] == degree[i]) odo[i++] = 0;
    if (i == k) break;
    ++odo[i];
  }
  out.certificate = SearchCertificate::GridExhausted;
  return out;
}

MetricSearch search_invariant_metric(const LieAlgebra& L) {
  FormFamily fam = invariant_sym_forms(L);
  std::vector<Matrix> pencil;
  for (const auto& b : fam.basis) pencil.push_back(b.matrix());
  PencilSearch s = find_nondegenerate_member(pencil, L.dim());
  MetricSearch out{std::nullopt, s.certificate};
  if (s.coefficients) out.metric = fam.member(*s.coefficients);
  return out;
}

std::optional<SymBilinearForm> find_invariant_metric(const LieAlgebra& L) { return search_invariant_metric(L).metric; }

}  // namespace liedual
