#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "liedual/catalog.hpp"
#include "liedual/classification.hpp"
#include "liedual/commands.hpp"
#include "liedual/document.hpp"
#include "liedual/error.hpp"
#include "liedual/forms.hpp"

namespace py = pybind11;
using namespace liedual;

namespace {

using StringMatrix = std::vector<std::vector<std::string>>;

StringMatrix to_strings(const Matrix& m) {
  StringMatrix out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_string(m(i, j));
  return out;
}

std::vector<Rational> parse_all(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(parse_rational(x));
  return out;
}

std::vector<std::string> format_all(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::string export_item(const CatalogItem& item) {
  return serialize(AlgebraDocument{item.algebra, item.form, item.derivation, item.structure});
}

}  // namespace

PYBIND11_MODULE(_liedual, m) {
  m.doc() = "Exact Lie algebra duality toolkit";

  static py::exception<Error> error_type(m, "LiedualError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object loc = e.location().empty() ? py::object(py::none()) : py::object(py::str(e.location()));
      py::tuple args = py::make_tuple(std::string(to_string(e.code())), loc, std::string(e.what()));
      PyErr_SetObject(error_type.ptr(), args.ptr());
    }
  });

  m.attr("DEFAULT_MAX_DIM") = default_max_dim;

  m.def("command_names", &command_names);

  m.def(
      "run",
      [](const std::string& name, const std::vector<std::string>& args, bool json, bool skew,
         std::optional<std::string> form_file, std::optional<std::string> derivation_file, bool numeric,
         double tol, std::size_t max_dim, std::optional<std::map<std::string, std::string>> files) {
        CommandOptions opts;
        opts.json = json;
        opts.skew = skew;
        opts.form_file = std::move(form_file);
        opts.derivation_file = std::move(derivation_file);
        opts.numeric = numeric;
        opts.tol = tol;
        opts.max_dim = max_dim;
        FileReader reader = read_file;
        if (files) {
          reader = [files = *files](const std::string& path) {
            auto it = files.find(path);
            if (it == files.end()) throw Error(ErrorCode::IoError, "no such input");
            return it->second;
          };
        }
        CommandResult r;
        {
          py::gil_scoped_release release;
          r = run_command(name, args, opts, reader);
        }
        return py::make_tuple(r.status, r.out, r.err);
      },
      py::arg("name"), py::arg("args") = std::vector<std::string>{}, py::kw_only(), py::arg("json") = false,
      py::arg("skew") = false, py::arg("form_file") = py::none(), py::arg("derivation_file") = py::none(),
      py::arg("numeric") = false, py::arg("tol") = 1e-9, py::arg("max_dim") = default_max_dim,
      py::arg("files") = py::none(),
      "Run a command as the CLI would. Returns (status, stdout, stderr). With files, inputs are "
      "looked up in that mapping instead of on disk.");

  m.def(
      "normalize",
      [](const std::string& text, std::size_t max_dim) { return serialize(parse_algebra_document(text, max_dim)); },
      py::arg("text"), py::arg("max_dim") = default_max_dim,
      "Validate a document and return its canonical serialization.");

  m.def("catalog_names", &catalog_names);
  m.def(
      "catalog_export",
      [](const std::string& name, const std::vector<std::string>& args) {
        return export_item(catalog_lookup(name, args));
      },
      py::arg("name"), py::arg("args") = std::vector<std::string>{});

  m.def(
      "invariant_forms",
      [](const std::string& text) {
        AlgebraDocument doc = parse_algebra_document(text, max_dim_from_env());
        std::vector<StringMatrix> out;
        for (const auto& b : invariant_sym_forms(doc.algebra).basis) out.push_back(to_strings(b.matrix()));
        return out;
      },
      py::arg("text"), "Basis of the invariant symmetric bilinear forms, entries as rational strings.");

  m.def(
      "nappi_witten",
      [](const std::vector<std::string>& mu) {
        DoubleExtension E = nappi_witten(parse_all(mu));
        AlgebraDocument out;
        out.algebra = E.algebra;
        out.form = E.form;
        out.structure = BargmannianStructure{E.form, unit_vector(E.algebra.dim(), E.z_index)};
        return serialize(out);
      },
      py::arg("mu"));

  m.def(
      "skew_eigenvalues",
      [](const std::vector<std::string>& coeffs) -> std::optional<std::vector<std::string>> {
        auto mu = exact_skew_eigenvalues(Polynomial(parse_all(coeffs)));
        if (!mu) return std::nullopt;
        return format_all(*mu);
      },
      py::arg("coefficients"),
      "Exact mu from a characteristic polynomial given by ascending coefficients, or None.");

  m.def(
      "numeric_skew_eigenvalues",
      [](const std::vector<std::string>& coeffs, double tol) {
        return numeric_skew_eigenvalues(Polynomial(parse_all(coeffs)), tol);
      },
      py::arg("coefficients"), py::arg("tol") = 1e-9);

  m.def(
      "canonical_rational", [](const std::string& s) { return to_string(parse_rational(s)); }, py::arg("text"));
}
