#include "liedual/commands.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "liedual/catalog.hpp"
#include "liedual/classification.hpp"

namespace liedual {

using nlohmann::json;

namespace {

std::string matrix_text(const Matrix& m, const std::string& indent = "  ") {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t w = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i].push_back(to_string(m(i, j)));
      w = std::max(w, cells[i].back().size());
    }
  std::ostringstream s;
  for (const auto& row : cells) {
    s << indent << "[";
    for (std::size_t j = 0; j < row.size(); ++j) s << (j ? " " : "") << std::setw(static_cast<int>(w)) << row[j];
    s << "]\n";
  }
  return s.str();
}

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string_view certificate_name(SearchCertificate c) {
  switch (c) {
    case SearchCertificate::Witness: return "witness";
    case SearchCertificate::EmptyFamily: return "empty-family";
    case SearchCertificate::CommonKernel: return "common-kernel";
    case SearchCertificate::GridExhausted: return "grid-exhausted";
    case SearchCertificate::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view structure_name(const StructureCertificate& s) {
  switch (s.index()) {
    case 0: return "bargmannian";
    case 1: return "carrollian";
    case 2: return "galilean";
    default: return "leibnizian";
  }
}

std::optional<std::string> structure_violation(const LieAlgebra& L, const StructureCertificate& s) {
  return std::visit(
      [&](const auto& v) -> std::optional<std::string> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BargmannianStructure>) return bargmannian_violation(L, v);
        else if constexpr (std::is_same_v<T, CarrollianStructure>) return carrollian_violation(L, v);
        else if constexpr (std::is_same_v<T, GalileanStructure>) return galilean_violation(L, v);
        else return leibnizian_violation(L, v);
      },
      s);
}

struct Ctx {
  const std::vector<std::string>& args;
  const CommandOptions& opts;
  const FileReader& reader;

  const std::string& arg(std::size_t i, const char* what) const {
    if (i >= args.size()) throw Error(ErrorCode::Usage, std::string("missing argument ") + what);
    return args[i];
  }
  void max_args(std::size_t n) const {
    if (args.size() > n) throw Error(ErrorCode::Usage, "unexpected argument \"" + args[n] + "\"");
  }
  AlgebraDocument load(const std::string& path) const {
    try {
      return parse_algebra_document(reader(path), opts.max_dim);
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what(), e.location());
    }
  }
  std::string document(const AlgebraDocument& doc) const {
    if (doc.algebra.dim() > opts.max_dim)
      throw Error(ErrorCode::LimitExceeded,
                  "output dimension " + std::to_string(doc.algebra.dim()) + " exceeds the limit " +
                      std::to_string(opts.max_dim) + " (LIEDUAL_MAX_DIM)");
    return serialize(doc);
  }
};

const SymBilinearForm& require_form(const AlgebraDocument& doc) {
  if (!doc.form) throw Error(ErrorCode::InvalidData, "document has no form", "/form");
  return *doc.form;
}

DoubleExtensionData require_data(const AlgebraDocument& doc) {
  if (!doc.derivation) throw Error(ErrorCode::InvalidData, "document has no derivation", "/derivation");
  DoubleExtensionData d{doc.algebra, require_form(doc), *doc.derivation};
  d.validate();
  return d;
}

template <class S>
std::optional<S> attached(const AlgebraDocument& doc) {
  if (!doc.structure) return std::nullopt;
  if (const S* s = std::get_if<S>(&*doc.structure)) return *s;
  throw Error(ErrorCode::StructureInvalid, "document carries a " + std::string(structure_name(*doc.structure)) +
                                               " structure", "/structure/type");
}

BargmannianStructure bargmannian_of(const AlgebraDocument& doc) {
  if (auto s = attached<BargmannianStructure>(doc)) {
    if (auto v = bargmannian_violation(doc.algebra, *s)) throw Error(ErrorCode::StructureInvalid, *v, "/structure");
    return *s;
  }
  if (doc.form) {
    for (const auto& c : find_bargmannian(doc.algebra))
      if (c.form == *doc.form) return c;
    // The attached form may admit a central null vector outside the search's candidate lines.
    Subspace zc = center(doc.algebra);
    for (const auto& z : zc.basis()) {
      BargmannianStructure s{*doc.form, z};
      if (verify_bargmannian(doc.algebra, s)) return s;
    }
  }
  auto found = find_bargmannian(doc.algebra);
  if (found.empty()) throw Error(ErrorCode::StructureInvalid, "no bargmannian structure found");
  return found.front();
}

CommandResult check(const Ctx& c) {
  c.max_args(1);
  AlgebraDocument doc = c.load(c.arg(0, "FILE"));
  const LieAlgebra& L = doc.algebra;
  json rep{{"dim", L.dim()}, {"jacobi", true}};
  std::ostringstream t;
  t << "algebra: dim " << L.dim() << ", " << L.brackets().size() << " nonzero brackets, Jacobi ok\n";
  if (doc.form) {
    if (!is_invariant(L, *doc.form)) throw Error(ErrorCode::InvalidData, "form is not ad-invariant", "/form");
    Signature sg = signature(*doc.form);
    rep["form"] = {{"invariant", true}, {"signature", {sg.positive, sg.negative, sg.zero}}};
    t << "form: invariant, signature (" << sg.positive << ", " << sg.negative << ", " << sg.zero << ")\n";
  }
  if (doc.derivation) {
    if (!is_derivation(L, *doc.derivation))
      throw Error(ErrorCode::NotADerivation, "matrix violates the Leibniz rule", "/derivation");
    bool skew = false;
    if (doc.form) {
      skew = is_skew(*doc.form, *doc.derivation);
      if (!skew) throw Error(ErrorCode::NotADerivation, "derivation is not skew for the form", "/derivation");
    }
    rep["derivation"] = {{"derivation", true}, {"skew", skew}};
    t << "derivation: ok" << (doc.form ? ", skew" : "") << "\n";
  }
  if (doc.structure) {
    if (auto v = structure_violation(L, *doc.structure)) throw Error(ErrorCode::StructureInvalid, *v, "/structure");
    rep["structure"] = {{"type", structure_name(*doc.structure)}, {"verified", true}};
    t << "structure: " << structure_name(*doc.structure) << ", verified\n";
  }
  rep["ok"] = true;
  t << "ok\n";
  return {0, c.opts.json ? rep.dump(2) + "\n" : t.str(), ""};
}

CommandResult invariant_forms(const Ctx& c) {
  c.max_args(1);
  AlgebraDocument doc = c.load(c.arg(0, "FILE"));
  FormFamily fam = invariant_sym_forms(doc.algebra);
  MetricSearch ms = search_invariant_metric(doc.algebra);
  json rep{{"dim", doc.algebra.dim()}, {"family_dim", fam.size()}, {"certificate", certificate_name(ms.certificate)}};
  rep["family"] = json::array();
  std::ostringstream t;
  t << "invariant symmetric forms: family of dimension " << fam.size() << "\n";
  for (std::size_t i = 0; i < fam.size(); ++i) {
    rep["family"].push_back(matrix_to_json(fam.basis[i].matrix()));
    t << "basis[" << i << "]:\n" << matrix_text(fam.basis[i].matrix());
  }
  if (ms.metric) {
    Signature sg = signature(*ms.metric);
    rep["nondegenerate"] = matrix_to_json(ms.metric->matrix());
    rep["signature"] = {sg.positive, sg.negative, sg.zero};
    t << "nondegenerate member (" << certificate_name(ms.certificate) << "), signature (" << sg.positive << ", "
      << sg.negative << ", " << sg.zero << "):\n"
      << matrix_text(ms.metric->matrix());
  } else {
    rep["nondegenerate"] = nullptr;
    t << "no nondegenerate member (" << certificate_name(ms.certificate) << ")\n";
  }
  return {0, c.opts.json ? rep.dump(2) + "\n" : t.str(), ""};
}

CommandResult derivations(const Ctx& c) {
  c.max_args(1);
  AlgebraDocument doc = c.load(c.arg(0, "FILE"));
  const std::size_t n = doc.algebra.dim();
  if (c.opts.form_file && !c.opts.skew) throw Error(ErrorCode::Usage, "--form requires --skew");
  std::vector<Matrix> basis;
  if (c.opts.skew) {
    SymBilinearForm B;
    if (c.opts.form_file) {
      try {
        B = SymBilinearForm(parse_matrix_attachment(c.reader(*c.opts.form_file), n, "form"));
      } catch (const Error& e) {
        throw Error(e.code(), *c.opts.form_file + ": " + e.what(), e.location());
      }
    } else {
      B = require_form(doc);
    }
    basis = skew_derivation_space(doc.algebra, B);
  } else {
    basis = derivation_space(doc.algebra);
  }
  json rep{{"dim", n}, {"skew", c.opts.skew}, {"space_dim", basis.size()}, {"basis", json::array()}};
  std::ostringstream t;
  t << (c.opts.skew ? "skew derivations" : "derivations") << ": space of dimension " << basis.size() << "\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    rep["basis"].push_back(matrix_to_json(basis[i]));
    t << "basis[" << i << "]:\n" << matrix_text(basis[i]);
  }
  return {0, c.opts.json ? rep.dump(2) + "\n" : t.str(), ""};
}

CommandResult double_extend_cmd(const Ctx& c) {
  c.max_args(1);
  if (!c.opts.derivation_file) throw Error(ErrorCode::Usage, "double-extend requires --derivation FILE");
  AlgebraDocument base = c.load(c.arg(0, "BASE"));
  Matrix d;
  try {
    d = parse_matrix_attachment(c.reader(*c.opts.derivation_file), base.algebra.dim(), "derivation");
  } catch (const Error& e) {
    throw Error(e.code(), *c.opts.derivation_file + ": " + e.what(), e.location());
  }
  DoubleExtension E = double_extend(DoubleExtensionData{base.algebra, require_form(base), d});
  AlgebraDocument out;
  out.algebra = E.algebra;
  out.form = E.form;
  out.structure = BargmannianStructure{E.form, unit_vector(E.algebra.dim(), E.z_index)};
  return {0, c.document(out), ""};
}

CommandResult reduce(const Ctx& c) {
  c.max_args(1);
  AlgebraDocument doc = c.load(c.arg(0, "FILE"));
  BargmannReduction r = reduce_bargmannian(doc.algebra, bargmannian_of(doc));
  AlgebraDocument out;
  out.algebra = r.data.base;
  out.form = r.data.form;
  out.derivation = r.data.der;
  return {0, c.document(out), ""};
}

CommandResult carroll_dual(const Ctx& c) {
  c.max_args(1);
  AlgebraDocument doc = c.load(c.arg(0, "FILE"));
  std::optional<CarrollianStructure> s = attached<CarrollianStructure>(doc);
  if (!s) {
    auto found = find_carrollian(doc.algebra);
    if (found.empty()) throw Error(ErrorCode::StructureInvalid, "no carrollian structure found");
    s = found.front();
  }
  CarrollToGalilei r = carroll_to_galilei(doc.algebra, *s);
  AlgebraDocument out;
  out.algebra = r.result.algebra;
  out.structure = r.result.structure;
  return {0, c.document(out), ""};
}

CommandResult galilei_dual(const Ctx& c) {
  c.max_args(1);
  AlgebraDocument doc = c.load(c.arg(0, "FILE"));
  std::optional<GalileanStructure> s = attached<GalileanStructure>(doc);
  if (!s) {
    auto found = find_galilean(doc.algebra);
    if (found.empty()) throw Error(ErrorCode::StructureInvalid, "no galilean structure found");
    s = found.front();
  }
  GalileiToCarroll r = galilei_to_carroll(doc.algebra, *s);
  AlgebraDocument out;
  out.algebra = r.result.algebra;
  out.structure = r.result.structure;
  return {0, c.document(out), ""};
}

CommandResult classify(const Ctx& c) {
  c.max_args(1);
  if (!(c.opts.tol > 0)) throw Error(ErrorCode::Usage, "--tol must be positive");
  AlgebraDocument doc = c.load(c.arg(0, "FILE"));
  DoubleExtensionData data = doc.derivation ? require_data(doc) : reduce_bargmannian(doc.algebra, bargmannian_of(doc)).data;
  ClassificationData cd = canonical_data(data);
  auto exact = exact_skew_eigenvalues(cd.char_poly);

  json rep;
  rep["semisimple"] = json::array();
  for (const auto& f : cd.semisimple) rep["semisimple"].push_back({f.dim, to_string(f.lambda)});
  rep["a0_dim"] = cd.a0_dim;
  rep["a1_dim"] = cd.a1_dim;
  rep["char_poly"] = cd.char_poly.to_string();
  rep["char_poly_coefficients"] = json::array();
  const auto& co = cd.char_poly.coefficients();
  for (std::size_t k = co.size(); k-- > 0;) rep["char_poly_coefficients"].push_back(to_string(co[k]));
  rep["omega"] = matrix_to_json(cd.omega);
  std::string text = cd.canonical_record();
  if (exact) {
    rep["mu"] = vector_to_json(*exact);
    text += "mu:";
    for (const auto& m : *exact) text += " " + to_string(m);
    text += "\n";
  } else {
    rep["mu"] = nullptr;
    text += "mu: irrational\n";
  }
  if (c.opts.numeric) {
    auto mus = numeric_skew_eigenvalues(cd.char_poly, c.opts.tol);
    rep["mu_numeric"] = mus;
    rep["tol"] = c.opts.tol;
    std::ostringstream s;
    s << std::setprecision(17) << "mu_numeric:";
    for (double m : mus) s << " " << m;
    s << "\n";
    text += s.str();
  }
  return {0, c.opts.json ? rep.dump(2) + "\n" : text, ""};
}

CommandResult catalog(const Ctx& c) {
  if (c.args.empty()) {
    json rep = json::array();
    std::ostringstream t;
    for (const auto& [name, synopsis] : catalog_names()) {
      rep.push_back({{"name", name}, {"args", synopsis}});
      t << name << (synopsis.empty() ? "" : " " + synopsis) << "\n";
    }
    return {0, c.opts.json ? rep.dump(2) + "\n" : t.str(), ""};
  }
  std::vector<std::string> rest(c.args.begin() + 1, c.args.end());
  CatalogItem item = catalog_lookup(c.args[0], rest);
  AlgebraDocument out{item.algebra, item.form, item.derivation, item.structure};
  return {0, c.document(out), ""};
}

CommandResult leibniz(const Ctx& c) {
  c.max_args(1);
  AlgebraDocument doc = c.load(c.arg(0, "FILE"));
  auto s = attached<LeibnizianStructure>(doc);
  if (!s) throw Error(ErrorCode::StructureInvalid, "document has no leibnizian structure", "/structure");
  LeibnizDecomposition d = leibniz_decompose(doc.algebra, *s);
  json rep;
  rep["carroll_dim"] = d.carroll.algebra.dim();
  rep["base_dim"] = d.metric.base.dim();
  rep["d0"] = matrix_to_json(d.d0);
  rep["dbar0"] = matrix_to_json(d.dbar0);
  rep["d0_char_poly"] = d.d0_char.to_string();
  rep["dbar0_char_poly"] = d.dbar0_char.to_string();
  rep["same_char_poly"] = d.same_char_poly;
  rep["bargmannian"] = json::array();
  for (const auto& b : d.bargmannian) rep["bargmannian"].push_back(structure_to_json(b));
  rep["invariant_metric"] = d.invariant_metric ? matrix_to_json(d.invariant_metric->matrix()) : json(nullptr);

  std::ostringstream t;
  t << "ker psi: carrollian, dim " << d.carroll.algebra.dim() << "\n";
  t << "base g0: dim " << d.metric.base.dim() << "\n";
  t << "D0 (metric side):\n" << matrix_text(d.d0) << "  char poly: " << d.d0_char.to_string() << "\n";
  t << "Dbar0 (galilean side):\n" << matrix_text(d.dbar0) << "  char poly: " << d.dbar0_char.to_string() << "\n";
  t << "same characteristic polynomial: " << (d.same_char_poly ? "yes" : "no") << "\n";
  if (d.bargmannian.empty()) {
    t << "bargmannian: none\n";
  } else {
    t << "bargmannian: z = " << vector_text(d.bargmannian.front().z) << ", form:\n"
      << matrix_text(d.bargmannian.front().form.matrix());
  }
  if (d.invariant_metric)
    t << "invariant metric:\n" << matrix_text(d.invariant_metric->matrix());
  else
    t << "invariant metric: none\n";
  return {0, c.opts.json ? rep.dump(2) + "\n" : t.str(), ""};
}

using Handler = CommandResult (*)(const Ctx&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"check", check},
      {"invariant-forms", invariant_forms},
      {"derivations", derivations},
      {"double-extend", double_extend_cmd},
      {"reduce", reduce},
      {"carroll-dual", carroll_dual},
      {"galilei-dual", galilei_dual},
      {"classify", classify},
      {"catalog", catalog},
      {"leibniz-decompose", leibniz},
  };
  return h;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open file", path);
  std::ostringstream s;
  s << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "read failed", path);
  return s.str();
}

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : handlers()) out.push_back(k);
  return out;
}

std::string format_error(const Error& e, bool json_out) {
  if (json_out) {
    json j{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
    j["error"]["location"] = e.location().empty() ? json(nullptr) : json(e.location());
    return j.dump() + "\n";
  }
  std::string s = "error[" + std::string(to_string(e.code())) + "]";
  if (!e.location().empty()) s += " at " + e.location();
  return s + ": " + e.what() + "\n";
}

CommandResult run_command(const std::string& name, const std::vector<std::string>& args, const CommandOptions& opts,
                          const FileReader& reader) {
  try {
    auto it = handlers().find(name);
    if (it == handlers().end()) throw Error(ErrorCode::UnknownCommand, "unknown command \"" + name + "\"");
    return it->second(Ctx{args, opts, reader});
  } catch (const Error& e) {
    return {e.code() == ErrorCode::Usage ? 2 : 1, "", format_error(e, opts.json)};
  } catch (const std::exception& e) {
    return {1, "", format_error(Error(ErrorCode::InvalidData, e.what()), opts.json)};
  }
}

}  // namespace liedual
