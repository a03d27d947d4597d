#include "liedual/catalog.hpp"

#include <charconv>

#include "liedual/classification.hpp"
#include "liedual/error.hpp"

namespace liedual {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// Dense table builder that keeps antisymmetry.
struct Table {
  std::size_t n;
  std::vector<Rational> t;
  explicit Table(std::size_t dim) : n(dim), t(dim * dim * dim) {}
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (sgn(c) == 0) return;
    t[(i * n + j) * n + k] += c;
    t[(j * n + i) * n + k] -= c;
  }
};

}  // namespace

LieAlgebra abelian(std::size_t m) {
  return LieAlgebra::from_table(LieAlgebra::default_labels(m), std::vector<Rational>(m * m * m));
}

LieAlgebra su2() {
  return LieAlgebra(LieAlgebra::default_labels(3),
                    {{0, 1, {{2, 1}}}, {0, 2, {{1, -1}}}, {1, 2, {{0, 1}}}});
}

SymBilinearForm su2_form(const Rational& lambda) { return SymBilinearForm(2 * lambda * Matrix::identity(3)); }

ReductiveAlgebra compact_reductive(const std::vector<Rational>& lambdas, std::size_t m) {
  LieAlgebra L = abelian(0);
  Matrix B(0, 0);
  for (const auto& l : lambdas) {
    if (sgn(l) <= 0) throw Error(ErrorCode::InvalidSpec, "Killing multiples must be positive");
    L = direct_sum(L, su2());
    B = direct_sum(B, su2_form(l).matrix());
  }
  L = direct_sum(L, abelian(m));
  B = direct_sum(B, Matrix::identity(m));
  L = LieAlgebra::from_table(LieAlgebra::default_labels(L.dim()), L.table());
  return {std::move(L), SymBilinearForm(std::move(B)), 3 * lambdas.size(), lambdas};
}

std::size_t kinematical_rotation_dim(std::size_t n) { return n * (n - 1) / 2; }

LieAlgebra kinematical(const KinematicalSpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw Error(ErrorCode::InvalidSpec, "spatial dimension must be at least 1");
  using F = KinematicalFamily;
  const bool has_h = spec.family != F::S0;
  const bool has_m = spec.family == F::Bargmann || spec.family == F::BargmannAB;
  const std::size_t r = kinematical_rotation_dim(n);
  const std::size_t dim = r + 2 * n + (has_h ? 1 : 0) + (has_m ? 1 : 0);
  const std::size_t Bi = r, Pi = r + n, H = r + 2 * n, M = r + 2 * n + 1;

  std::vector<std::vector<std::size_t>> lidx(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  {
    std::size_t c = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        lidx[a][b] = lidx[b][a] = c++;
        labels.push_back("L" + std::to_string(a + 1) + std::to_string(b + 1));
      }
  }
  for (std::size_t a = 0; a < n; ++a) labels.push_back("B" + std::to_string(a + 1));
  for (std::size_t a = 0; a < n; ++a) labels.push_back("P" + std::to_string(a + 1));
  if (has_h) labels.push_back("H");
  if (has_m) labels.push_back("M");

  Table T(dim);
  // L_ab with a > b is -L_ba; L_aa = 0.
  auto addL = [&](std::size_t i, std::size_t j, std::size_t a, std::size_t b, const Rational& c) {
    if (a == b) return;
    T.add(i, j, lidx[a][b], a < b ? c : Rational(-c));
  };
  auto delta = [](std::size_t a, std::size_t b) { return a == b ? 1 : 0; };

  // [L_ab, L_cd] = d_bc L_ad - d_ac L_bd - d_bd L_ac + d_ad L_bc
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::size_t i = lidx[a][b], j = lidx[c][d];
          if (i >= j) continue;
          addL(i, j, a, d, delta(b, c));
          addL(i, j, b, d, -delta(a, c));
          addL(i, j, a, c, -delta(b, d));
          addL(i, j, b, c, delta(a, d));
        }
  // [L_ab, V_c] = d_bc V_a - d_ac V_b for V = B, P
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t base : {Bi, Pi}) {
          T.add(lidx[a][b], base + c, base + a, delta(b, c));
          T.add(lidx[a][b], base + c, base + b, -delta(a, c));
        }

  for (std::size_t a = 0; a < n; ++a) {
    switch (spec.family) {
      case F::Static:
      case F::S0:
        break;
      case F::Carroll:
        T.add(Bi + a, Pi + a, H, 1);
        break;
      case F::Galilei:
        T.add(H, Bi + a, Pi + a, -1);
        break;
      case F::Bargmann:
        T.add(H, Bi + a, Pi + a, -1);
        T.add(Bi + a, Pi + a, M, 1);
        break;
      case F::GalileiAB:
        T.add(H, Bi + a, Pi + a, -1);
        T.add(H, Pi + a, Bi + a, spec.alpha);
        T.add(H, Pi + a, Pi + a, spec.beta);
        break;
      case F::BargmannAB:
        T.add(H, Bi + a, Pi + a, -1);
        T.add(H, Pi + a, Bi + a, spec.alpha);
        T.add(H, Pi + a, Pi + a, spec.beta);
        T.add(Bi + a, Pi + a, M, 1);
        break;
    }
  }
  if (spec.family == F::BargmannAB) T.add(H, M, M, spec.beta);
  return LieAlgebra::from_table(std::move(labels), std::move(T.t));
}

LieAlgebra carroll_algebra(std::size_t n) { return kinematical({n, KinematicalFamily::Carroll, 0, 0}); }
LieAlgebra galilei_algebra(std::size_t n) { return kinematical({n, KinematicalFamily::Galilei, 0, 0}); }
LieAlgebra bargmann_algebra(std::size_t n) { return kinematical({n, KinematicalFamily::Bargmann, 0, 0}); }

LeibnizExample leibniz_counterexample(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  const std::size_t ep = 4, em = 5;
  Table T(6);
  T.add(0, 1, ep, 1);
  T.add(0, em, 1, beta);
  T.add(1, em, 0, -beta);
  T.add(2, 3, ep, alpha);
  T.add(2, em, 3, gamma);
  T.add(3, em, 2, -gamma);
  LieAlgebra L = LieAlgebra::from_table({"e1", "e2", "e3", "e4", "e+", "e-"}, std::move(T.t));
  Matrix h(6, 6);
  for (std::size_t i = 0; i < 4; ++i) h(i, i) = 1;
  LeibnizianStructure s{unit_vector(6, ep), Covector{unit_vector(6, em)}, SymBilinearForm(std::move(h))};
  return {std::move(L), std::move(s)};
}

DoubleExtension indexed_double_extension(const LieAlgebra& f, const SymBilinearForm& eta, const Matrix& omega) {
  const std::size_t n = f.dim();
  if (eta.dim() != n || omega.rows() != n || omega.cols() != n)
    throw Error(ErrorCode::InvalidData, "f, eta and omega dimensions differ");
  auto eta_inv = inverse(eta.matrix());
  if (!eta_inv) throw Error(ErrorCode::InvalidData, "eta is degenerate");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (omega(a, b) != -omega(b, a)) throw Error(ErrorCode::InvalidData, "omega is not skew", triple(a, b, b));

  auto lowered = [&](std::size_t a, std::size_t b, std::size_t c) {
    Rational s;
    for (std::size_t d = 0; d < n; ++d) s += f.constant(a, b, d) * eta.matrix()(d, c);
    return s;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (lowered(a, b, c) != -lowered(a, c, b))
          throw Error(ErrorCode::InvalidData, "f_abc is not totally skew-symmetric", triple(a, b, c));

  // up(c, a) = omega^c_a = eta^{cb} omega_ab
  Matrix up(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) up(c, a) += (*eta_inv)(c, b) * omega(a, b);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) {
        Rational s;
        for (std::size_t c = 0; c < n; ++c)
          s += up(d, c) * f.constant(a, b, c) - f.constant(c, b, d) * up(c, a) - f.constant(a, c, d) * up(c, b);
        if (sgn(s) != 0) throw Error(ErrorCode::InvalidData, "omega is not derivation-compatible", triple(a, b, d));
      }

  const std::size_t N = n + 2, plus = n, minus = n + 1;
  Table T(N);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) T.add(a, b, c, f.constant(a, b, c));
      T.add(a, b, plus, omega(a, b));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) T.add(minus, a, b, up(b, a));
  auto labels = f.labels();
  labels.push_back("Z");
  labels.push_back("D");
  Matrix g(N, N);
  g.set_block(0, 0, eta.matrix());
  g(plus, minus) = g(minus, plus) = 1;
  return {LieAlgebra::from_table(std::move(labels), std::move(T.t)), SymBilinearForm(std::move(g)), plus, minus};
}

namespace {

std::size_t parse_size(const std::string& s, const char* what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw Error(ErrorCode::InvalidSpec, std::string("expected a nonnegative integer for ") + what, s);
  return v;
}

Rational parse_arg(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidSpec, "expected a rational argument", s);
  }
}

void expect_args(const std::vector<std::string>& args, std::size_t lo, std::size_t hi, const std::string& name) {
  if (args.size() < lo || args.size() > hi)
    throw Error(ErrorCode::InvalidSpec, "wrong number of arguments for catalog entry " + name);
}

std::vector<Rational> parse_list(const std::vector<std::string>& args, std::size_t from) {
  std::vector<Rational> out;
  for (std::size_t i = from; i < args.size(); ++i) out.push_back(parse_arg(args[i]));
  return out;
}

Matrix rotation_blocks(const std::vector<Rational>& mu) { return -symplectic_blocks(mu); }

}  // namespace

std::vector<std::pair<std::string, std::string>> catalog_names() {
  return {
      {"abelian", "M"},
      {"su2", "[LAMBDA]"},
      {"reductive", "K M [LAMBDA...]"},
      {"heisenberg", "MU..."},
      {"nappi-witten", "[MU...]"},
      {"galilean-extension", "MU..."},
      {"static", "N"},
      {"s0", "N"},
      {"carroll", "N"},
      {"galilei", "N"},
      {"bargmann", "N"},
      {"galilei-ab", "N ALPHA BETA"},
      {"bargmann-ab", "N ALPHA BETA"},
      {"leibniz", "ALPHA BETA GAMMA"},
  };
}

CatalogItem catalog_lookup(const std::string& name, const std::vector<std::string>& args) {
  using F = KinematicalFamily;
  CatalogItem item;
  auto kin = [&](F family) {
    const bool ab = family == F::GalileiAB || family == F::BargmannAB;
    expect_args(args, ab ? 3 : 1, ab ? 3 : 1, name);
    KinematicalSpec spec{parse_size(args[0], "N"), family, 0, 0};
    if (ab) {
      spec.alpha = parse_arg(args[1]);
      spec.beta = parse_arg(args[2]);
    }
    item.algebra = kinematical(spec);
    return item;
  };

  if (name == "abelian") {
    expect_args(args, 1, 1, name);
    std::size_t m = parse_size(args[0], "M");
    item.algebra = abelian(m);
    item.form = SymBilinearForm::identity(m);
    return item;
  }
  if (name == "su2") {
    expect_args(args, 0, 1, name);
    item.algebra = su2();
    item.form = su2_form(args.empty() ? Rational(1) : parse_arg(args[0]));
    return item;
  }
  if (name == "reductive") {
    if (args.size() < 2) throw Error(ErrorCode::InvalidSpec, "reductive takes K M [LAMBDA...]");
    std::size_t k = parse_size(args[0], "K");
    std::size_t m = parse_size(args[1], "M");
    std::vector<Rational> lambdas = parse_list(args, 2);
    if (lambdas.empty()) lambdas.assign(k, Rational(1));
    if (lambdas.size() != k) throw Error(ErrorCode::InvalidSpec, "need exactly K Killing multiples");
    ReductiveAlgebra r = compact_reductive(lambdas, m);
    item.algebra = std::move(r.algebra);
    item.form = std::move(r.form);
    return item;
  }
  if (name == "heisenberg") {
    if (args.empty()) throw Error(ErrorCode::InvalidSpec, "heisenberg takes MU...");
    std::vector<Rational> mu = parse_list(args, 0);
    item.algebra = heisenberg(symplectic_blocks(mu));
    const std::size_t m = 2 * mu.size();
    Matrix h(m + 1, m + 1);
    h.set_block(0, 0, Matrix::identity(m));
    item.structure = CarrollianStructure{unit_vector(m + 1, m), SymBilinearForm(std::move(h))};
    return item;
  }
  if (name == "nappi-witten") {
    DoubleExtension E = nappi_witten(parse_list(args, 0));
    item.algebra = E.algebra;
    item.form = E.form;
    item.structure = BargmannianStructure{E.form, unit_vector(E.algebra.dim(), E.z_index)};
    return item;
  }
  if (name == "galilean-extension") {
    if (args.empty()) throw Error(ErrorCode::InvalidSpec, "galilean-extension takes MU...");
    GalileanAlgebra g = galilean_extension_algebra(rotation_blocks(parse_list(args, 0)));
    item.algebra = std::move(g.algebra);
    item.structure = std::move(g.structure);
    return item;
  }
  if (name == "static") return kin(F::Static);
  if (name == "s0") return kin(F::S0);
  if (name == "carroll") return kin(F::Carroll);
  if (name == "galilei") return kin(F::Galilei);
  if (name == "bargmann") return kin(F::Bargmann);
  if (name == "galilei-ab") return kin(F::GalileiAB);
  if (name == "bargmann-ab") return kin(F::BargmannAB);
  if (name == "leibniz") {
    expect_args(args, 3, 3, name);
    LeibnizExample ex = leibniz_counterexample(parse_arg(args[0]), parse_arg(args[1]), parse_arg(args[2]));
    item.algebra = std::move(ex.algebra);
    item.structure = std::move(ex.structure);
    return item;
  }
  throw Error(ErrorCode::InvalidSpec, "unknown catalog entry", name);
}

}  // namespace liedual
