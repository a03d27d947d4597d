// One line per acceptance criterion. `acceptance` runs all of them,
// `acceptance N` runs criterion N only. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "liedual/catalog.hpp"
#include "liedual/classification.hpp"
#include "liedual/commands.hpp"
#include "support.hpp"

using namespace liedual;

namespace {

// Runtime limits in seconds; all numeric comparisons are exact.
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 30.0;
constexpr double kLimit3 = 30.0;
constexpr double kLimit4 = 10.0;
constexpr double kLimit5 = 10.0;
constexpr double kLimit6 = 5.0;
constexpr double kLimit7 = 10.0;
constexpr double kLimit8 = 10.0;
constexpr double kLimit9 = 5.0;
constexpr double kLimit10 = 5.0;

constexpr int kDoubleExtensionCases = 200;
constexpr std::uint32_t kSeed = 20261016;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

bool invariant_brute(const LieAlgebra& L, const Matrix& B) {
  const std::size_t n = L.dim();
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Rational s;
        for (std::size_t k = 0; k < n; ++k) s += L.constant(w, x, k) * B(k, y) + L.constant(w, y, k) * B(x, k);
        if (sgn(s) != 0) return false;
      }
  return true;
}

std::string abc(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// Invariant forms of the six-dimensional leibnizian family. Expected span: the
// block form with diagonal (g, g, ab, ab), <e+,e-> = -bg, <e+,e+> = 0, plus
// the free <e-,e-> direction.
Outcome criterion1() {
  Outcome o;
  std::ostringstream fails;
  int dim_fail = 0, nondeg_fail = 0;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int g = -1; g <= 1; ++g) {
        LeibnizExample ex = leibniz_counterexample(a, b, g);
        FormFamily fam = invariant_sym_forms(ex.algebra);
        Matrix m1(6, 6), m2(6, 6);
        m1(0, 0) = m1(1, 1) = g;
        m1(2, 2) = m1(3, 3) = a * b;
        m1(4, 5) = m1(5, 4) = -b * g;
        m2(5, 5) = 1;
        std::vector<Vector> got;
        for (const auto& f : fam.basis) got.push_back(flatten(f.matrix()));
        bool ok = fam.size() == 2 && Subspace::span(36, got) == Subspace::span(36, {flatten(m1), flatten(m2)});
        if (!ok) {
          ++dim_fail;
          fails << " " << abc(a, b, g) << ":dim" << fam.size();
        }
        const bool has_metric = search_invariant_metric(ex.algebra).metric.has_value();
        if (has_metric != (a * b * g != 0)) {
          ++nondeg_fail;
          fails << " " << abc(a, b, g) << ":metric=" << (has_metric ? "yes" : "no");
        }
      }
  o.require(dim_fail == 0 && nondeg_fail == 0,
            std::to_string(dim_fail) + " family mismatches, " + std::to_string(nondeg_fail) +
                " nondegeneracy mismatches:" + fails.str());
  if (o.pass) o.detail = "27 parameter points, family dim 2 and nondegenerate iff abg != 0";
  return o;
}

std::vector<testing::RandomBase> double_extension_cases() {
  std::mt19937 rng(kSeed);
  std::vector<testing::RandomBase> out;
  for (int i = 0; i < kDoubleExtensionCases; ++i) out.push_back(testing::random_base(rng, 6));
  return out;
}

Outcome criterion2() {
  Outcome o;
  int i = 0;
  for (const auto& c : double_extension_cases()) {
    const std::string tag = "case " + std::to_string(i++);
    DoubleExtension E = double_extend(c.data());
    const std::size_t N = E.algebra.dim();
    const Vector z = unit_vector(N, E.z_index);
    o.require(check_jacobi(E.algebra).empty(), tag + ": Jacobi");
    o.require(invariant_brute(E.algebra, E.form.matrix()), tag + ": form not invariant");
    o.require(center(E.algebra).contains(z), tag + ": Z not central");
    o.require(sgn(E.form(z, z)) == 0, tag + ": Z not null");
    Signature s0 = signature(c.red.form), s = signature(E.form);
    o.require(s == Signature{s0.positive + 1, s0.negative + 1, 0}, tag + ": signature lift");
  }
  if (o.pass) o.detail = std::to_string(kDoubleExtensionCases) + " random cases";
  return o;
}

Outcome criterion3() {
  Outcome o;
  int i = 0;
  for (const auto& c : double_extension_cases()) {
    const std::string tag = "case " + std::to_string(i++);
    DoubleExtension E = double_extend(c.data());
    CarrollAlgebra car = carroll_ideal(E);
    const std::size_t M = car.algebra.dim();
    Quotient q = quotient_by_ideal(car.algebra, Subspace::span(M, {car.structure.z}));
    o.require(q.algebra.same_structure(c.red.algebra), tag + ": carrollian ideal / Z differs from the base");
    o.require(galilei_quotient(E).algebra.same_structure(extend_by_derivation(c.red.algebra, c.d0)),
              tag + ": galilean quotient differs from the derivation extension");
  }
  if (o.pass) o.detail = std::to_string(kDoubleExtensionCases) + " random cases";
  return o;
}

bool preserves_carrollian(const LinearMap& phi, const CarrollianStructure& a, const CarrollianStructure& b) {
  const Matrix& P = phi.matrix();
  return phi(a.z) == b.z && P.transpose() * b.h.matrix() * P == a.h.matrix();
}

// tau' o phi = tau and phi gamma phi^T = gamma'
bool preserves_galilean(const LinearMap& phi, const GalileanStructure& a, const GalileanStructure& b) {
  const Matrix& P = phi.matrix();
  Vector pulled = P.transpose() * b.tau.coords;
  return pulled == a.tau.coords && P * a.gamma.matrix() * P.transpose() == b.gamma.matrix();
}

std::vector<std::vector<Rational>> mu_grid() {
  const std::vector<Rational> values{3, 2, ratio(3, 2), 1, ratio(1, 2)};
  std::vector<std::vector<Rational>> out;
  std::function<void(std::vector<Rational>&, std::size_t)> rec = [&](std::vector<Rational>& cur, std::size_t from) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == 3) return;
    for (std::size_t i = from; i < values.size(); ++i) {
      cur.push_back(values[i]);
      rec(cur, i);
      cur.pop_back();
    }
  };
  std::vector<Rational> cur;
  rec(cur, 0);
  return out;
}

Outcome criterion4() {
  Outcome o;
  const auto grid = mu_grid();
  for (const auto& mu : grid) {
    std::string tag = "mu =";
    for (const auto& m : mu) tag += " " + to_string(m);
    DoubleExtension nw = nappi_witten(mu);

    CarrollAlgebra c = carroll_ideal(nw);
    CarrollToGalilei cg = carroll_to_galilei(c.algebra, c.structure);
    GalileiToCarroll back = galilei_to_carroll(cg.result.algebra, cg.result.structure);
    o.require(back.data == cg.data, tag + ": carroll round trip changed the data");
    o.require(is_isomorphism(cg.input_map, c.algebra, back.result.algebra),
              tag + ": carroll round trip witness is not an isomorphism");
    o.require(preserves_carrollian(cg.input_map, c.structure, back.result.structure),
              tag + ": carroll round trip witness does not carry the structure");

    GalileanAlgebra g = galilei_quotient(nw);
    GalileiToCarroll gc = galilei_to_carroll(g.algebra, g.structure);
    CarrollToGalilei fwd = carroll_to_galilei(gc.result.algebra, gc.result.structure);
    o.require(fwd.data == gc.data, tag + ": galilei round trip changed the data");
    o.require(is_isomorphism(gc.input_map, g.algebra, fwd.result.algebra),
              tag + ": galilei round trip witness is not an isomorphism");
    o.require(preserves_galilean(gc.input_map, g.structure, fwd.result.structure),
              tag + ": galilei round trip witness does not carry the structure");
  }
  if (o.pass) o.detail = std::to_string(grid.size()) + " normal forms, both directions";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937 rng(kSeed + 5);
  std::vector<std::pair<std::vector<Rational>, Polynomial>> seen;
  for (int i = 0; i < 50; ++i) {
    auto mu = testing::random_mu(rng, 1 + rng() % 3);
    ClassificationData cd = canonical_data(nappi_witten(mu));
    auto rec = exact_skew_eigenvalues(cd.char_poly);
    o.require(rec.has_value() && *rec == mu, "case " + std::to_string(i) + ": mu not recovered");
    for (const auto& [m, p] : seen)
      o.require((m == mu) == (p == cd.char_poly), "case " + std::to_string(i) + ": char_poly collision");
    seen.emplace_back(mu, cd.char_poly);
  }
  if (o.pass) o.detail = "50 mu lists recovered, char_polys distinct";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::size_t n : {2, 3}) {
    const std::string tag = "n = " + std::to_string(n);
    o.require(find_carrollian(carroll_algebra(n)).empty(), tag + ": carroll algebra is carrollian");
    o.require(find_galilean(galilei_algebra(n)).empty(), tag + ": galilei algebra is galilean");
    o.require(find_bargmannian(bargmann_algebra(n)).empty(), tag + ": bargmann algebra is bargmannian");
  }
  if (o.pass) o.detail = "no structures on c(n), g(n), b(n) for n = 2, 3";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937 rng(kSeed + 7);
  for (std::size_t k = 0; k <= 2; ++k)
    for (std::size_t m = 0; m <= 4; ++m) {
      const std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(m);
      ReductiveAlgebra r = compact_reductive(std::vector<Rational>(k, Rational(1)), m);
      auto space = skew_derivation_space(r.algebra, r.form);
      o.require(space.size() == 3 * k + m * (m - 1) / 2, tag + ": dimension " + std::to_string(space.size()));
      Matrix combo(r.algebra.dim(), r.algebra.dim());
      for (const auto& d : space) combo += testing::random_rational(rng) * d;
      space.push_back(combo);
      for (const auto& d : space) {
        SkewDecomposition p = decompose_skew_derivation(r.algebra, r.form, d, r.ss_dim);
        o.require(reassemble(r.algebra, p, r.ss_dim) == d, tag + ": reassembly differs");
      }
    }
  if (o.pass) o.detail = "dimension 3k + m(m-1)/2 for k <= 2, m <= 4; reassembly exact";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937 rng(kSeed + 8);
  for (int i = 0; i < 20; ++i) {
    auto c = testing::random_base(rng, 6);
    Matrix omega = cocycle_from_derivation(c.red.form, c.d0).matrix();
    DoubleExtension a = indexed_double_extension(c.red.algebra, c.red.form, omega);
    DoubleExtension b = double_extend(c.data());
    o.require(a.algebra == b.algebra && a.form == b.form && a.z_index == b.z_index && a.d_index == b.d_index,
              "case " + std::to_string(i) + ": outputs differ");
  }
  if (o.pass) o.detail = "20 random inputs identical";
  return o;
}

Outcome criterion9() {
  Outcome o;
  LeibnizExample a = leibniz_counterexample(0, 1, 1);
  LeibnizDecomposition da = leibniz_decompose(a.algebra, a.structure);
  o.require(!da.same_char_poly && da.d0_char != da.dbar0_char, "(0,1,1): D0 and Dbar0 have the same char_poly");
  o.require(!find_invariant_metric(a.algebra).has_value(), "(0,1,1): an invariant metric was found");
  LeibnizExample b = leibniz_counterexample(1, 1, 1);
  LeibnizDecomposition db = leibniz_decompose(b.algebra, b.structure);
  o.require(!db.bargmannian.empty() && verify_bargmannian(b.algebra, db.bargmannian.front()),
            "(1,1,1): no bargmannian certificate");
  if (o.pass)
    o.detail = "(0,1,1): " + da.d0_char.to_string() + " vs " + da.dbar0_char.to_string() +
               ", no metric; (1,1,1): bargmannian";
  return o;
}

std::vector<std::vector<std::string>> catalog_exports() {
  std::vector<std::vector<std::string>> out{
      {"abelian", "0"}, {"abelian", "3"}, {"su2"}, {"su2", "5/2"}, {"reductive", "0", "2"},
      {"reductive", "1", "2", "3/2"}, {"reductive", "2", "1", "1", "2"}, {"heisenberg", "1"},
      {"heisenberg", "2", "1"}, {"heisenberg", "3", "3/2", "1/2"}, {"nappi-witten"}, {"nappi-witten", "1"},
      {"nappi-witten", "3", "1"}, {"galilean-extension", "1"}, {"galilean-extension", "3", "1"}};
  for (const char* fam : {"static", "s0", "carroll", "galilei", "bargmann"})
    for (const char* n : {"1", "2", "3"}) out.push_back({fam, n});
  for (const char* fam : {"galilei-ab", "bargmann-ab"})
    for (const char* n : {"1", "2", "3"})
      for (auto [a, b] : {std::pair<const char*, const char*>{"0", "0"}, {"1", "0"}, {"-1", "2"}, {"1/2", "1/3"}})
        out.push_back({fam, n, a, b});
  for (const char* a : {"-1", "0", "1"})
    for (const char* b : {"-1", "0", "1"})
      for (const char* c : {"-1", "0", "1"}) out.push_back({"leibniz", a, b, c});
  return out;
}

Outcome criterion10() {
  Outcome o;
  std::set<std::string> covered;
  const auto exports = catalog_exports();
  for (const auto& e : exports) {
    std::string tag;
    for (const auto& s : e) tag += (tag.empty() ? "" : " ") + s;
    CommandResult r = run_command("catalog", e, {});
    o.require(r.status == 0, tag + ": export failed: " + r.err);
    if (r.status != 0) continue;
    covered.insert(e[0]);
    AlgebraDocument doc = parse_algebra_document(r.out);
    o.require(serialize(doc) == r.out, tag + ": export is not canonical");
    o.require(serialize(parse_algebra_document(serialize(doc))) == serialize(doc), tag + ": reparse not idempotent");
    CommandResult chk = run_command("check", {"doc"}, {}, [&](const std::string&) { return r.out; });
    o.require(chk.status == 0, tag + ": check failed: " + chk.err);
  }
  for (const auto& [name, args] : catalog_names()) o.require(covered.count(name) == 1, name + ": not exported");
  if (o.pass) o.detail = std::to_string(exports.size()) + " exports covering " + std::to_string(covered.size()) + " names";
  return o;
}

struct Criterion {
  const char* name;
  Outcome (*run)();
  double limit;
};

const Criterion kCriteria[] = {
    {"invariant forms of the six-dimensional leibnizian family", criterion1, kLimit1},
    {"double extension properties", criterion2, kLimit2},
    {"carrollian ideal and galilean quotient diagram", criterion3, kLimit3},
    {"carroll/galilei duality round trip", criterion4, kLimit4},
    {"skew-eigenvalue recovery from nappi-witten", criterion5, kLimit5},
    {"kinematical algebras carry no structure", criterion6, kLimit6},
    {"skew derivations of compact reductive algebras", criterion7, kLimit7},
    {"indexed double extension agreement", criterion8, kLimit8},
    {"leibnizian algebra that is not bargmannian", criterion9, kLimit9},
    {"catalog export round trip", criterion10, kLimit10},
};

bool run_one(std::size_t i) {
  const Criterion& c = kCriteria[i];
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && secs >= c.limit) {
    o.pass = false;
    o.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit) + " s";
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3fs", secs);
  std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << " [" << timing << "] " << c.name
            << ": " << o.detail << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  constexpr std::size_t count = sizeof kCriteria / sizeof kCriteria[0];
  bool ok = true;
  if (argc > 1) {
    std::size_t i = std::stoul(argv[1]);
    if (i < 1 || i > count) {
      std::cerr << "criterion must be 1.." << count << "\n";
      return 2;
    }
    return run_one(i - 1) ? 0 : 1;
  }
  for (std::size_t i = 0; i < count; ++i) ok = run_one(i) && ok;
  return ok ? 0 : 1;
}
