#include "liedual/document.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>

#include "liedual/error.hpp"

namespace liedual {

using nlohmann::json;

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& msg, const std::string& where) {
  throw Error(code, msg, where.empty() ? "/" : where);
}

std::size_t index_from_json(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) fail(ErrorCode::InvalidData, "expected a nonnegative integer", where);
  return j.get<std::size_t>();
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorCode::InvalidData, std::string("missing field \"") + key + "\"", where);
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
      fail(ErrorCode::InvalidData, "unknown field \"" + it.key() + "\"", where + "/" + it.key());
}

SymBilinearForm form_from_json(const json& j, std::size_t n, const std::string& where) {
  Matrix m = matrix_from_json(j, n, n, where);
  if (!m.is_symmetric()) fail(ErrorCode::InvalidData, "form matrix is not symmetric", where);
  return SymBilinearForm(std::move(m));
}

StructureCertificate structure_from_json(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_object()) fail(ErrorCode::InvalidData, "structure must be an object", where);
  const json& type = field(j, "type", where);
  if (!type.is_string()) fail(ErrorCode::InvalidData, "structure type must be a string", where + "/type");
  const std::string t = type.get<std::string>();
  if (t == "bargmannian") {
    only_keys(j, {"type", "form", "z"}, where);
    return BargmannianStructure{form_from_json(field(j, "form", where), n, where + "/form"),
                                vector_from_json(field(j, "z", where), n, where + "/z")};
  }
  if (t == "carrollian") {
    only_keys(j, {"type", "z", "h"}, where);
    return CarrollianStructure{vector_from_json(field(j, "z", where), n, where + "/z"),
                               form_from_json(field(j, "h", where), n, where + "/h")};
  }
  if (t == "galilean") {
    only_keys(j, {"type", "tau", "gamma"}, where);
    return GalileanStructure{Covector{vector_from_json(field(j, "tau", where), n, where + "/tau")},
                             form_from_json(field(j, "gamma", where), n, where + "/gamma")};
  }
  if (t == "leibnizian") {
    only_keys(j, {"type", "z", "psi", "h"}, where);
    return LeibnizianStructure{vector_from_json(field(j, "z", where), n, where + "/z"),
                               Covector{vector_from_json(field(j, "psi", where), n, where + "/psi")},
                               form_from_json(field(j, "h", where), n, where + "/h")};
  }
  fail(ErrorCode::InvalidData, "unknown structure type \"" + t + "\"", where + "/type");
}

}  // namespace

std::size_t max_dim_from_env() {
  const char* v = std::getenv("LIEDUAL_MAX_DIM");
  if (v == nullptr || *v == '\0') return default_max_dim;
  std::string_view s(v);
  std::size_t out = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || p != s.data() + s.size())
    throw Error(ErrorCode::InvalidSpec, "LIEDUAL_MAX_DIM must be a nonnegative integer", std::string(s));
  return out;
}

json rational_to_json(const Rational& q) { return to_string(q); }

json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

json matrix_to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
  return a;
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
    return Rational(std::to_string(j.get<long long>()));
  }
  if (!j.is_string()) fail(ErrorCode::ParseError, "rationals must be strings \"p/q\" or integers", where);
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, e.what(), where);
  }
}

Vector vector_from_json(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    fail(ErrorCode::DimensionMismatch, "expected an array of " + std::to_string(n) + " rationals", where);
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rational_from_json(j[i], where + "/" + std::to_string(i));
  return v;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    fail(ErrorCode::DimensionMismatch, "expected a matrix with " + std::to_string(rows) + " rows", where);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Vector r = vector_from_json(j[i], cols, where + "/" + std::to_string(i));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = r[k];
  }
  return m;
}

json structure_to_json(const StructureCertificate& s) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BargmannianStructure>)
          return {{"type", "bargmannian"}, {"form", matrix_to_json(v.form.matrix())}, {"z", vector_to_json(v.z)}};
        else if constexpr (std::is_same_v<T, CarrollianStructure>)
          return {{"type", "carrollian"}, {"z", vector_to_json(v.z)}, {"h", matrix_to_json(v.h.matrix())}};
        else if constexpr (std::is_same_v<T, GalileanStructure>)
          return {{"type", "galilean"},
                  {"tau", vector_to_json(v.tau.coords)},
                  {"gamma", matrix_to_json(v.gamma.matrix())}};
        else
          return {{"type", "leibnizian"},
                  {"z", vector_to_json(v.z)},
                  {"psi", vector_to_json(v.psi.coords)},
                  {"h", matrix_to_json(v.h.matrix())}};
      },
      s);
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw Error(ErrorCode::ParseError, msg, std::to_string(line) + ":" + std::to_string(col));
  }
}

AlgebraDocument document_from_json(const json& j, std::size_t max_dim) {
  if (!j.is_object()) fail(ErrorCode::InvalidData, "document must be a JSON object", "");
  only_keys(j, {"dim", "basis", "brackets", "form", "derivation", "structure"}, "");
  const std::size_t n = index_from_json(field(j, "dim", ""), "/dim");
  if (n > max_dim)
    fail(ErrorCode::LimitExceeded,
         "dimension " + std::to_string(n) + " exceeds the limit " + std::to_string(max_dim) + " (LIEDUAL_MAX_DIM)",
         "/dim");

  std::vector<std::string> labels = LieAlgebra::default_labels(n);
  if (auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array() || it->size() != n)
      fail(ErrorCode::DimensionMismatch, "basis must list " + std::to_string(n) + " labels", "/basis");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) fail(ErrorCode::InvalidData, "labels must be strings", "/basis/" + std::to_string(i));
      labels[i] = (*it)[i].get<std::string>();
    }
  }

  std::vector<BracketEntry> entries;
  if (auto it = j.find("brackets"); it != j.end()) {
    if (!it->is_array()) fail(ErrorCode::InvalidData, "brackets must be an array", "/brackets");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < it->size(); ++e) {
      const std::string where = "/brackets/" + std::to_string(e);
      const json& b = (*it)[e];
      if (!b.is_object()) fail(ErrorCode::InvalidData, "bracket entry must be an object", where);
      only_keys(b, {"x", "y", "terms"}, where);
      BracketEntry entry{index_from_json(field(b, "x", where), where + "/x"),
                         index_from_json(field(b, "y", where), where + "/y"),
                         {}};
      if (entry.x >= n) fail(ErrorCode::IndexOutOfRange, "index out of range", where + "/x");
      if (entry.y >= n) fail(ErrorCode::IndexOutOfRange, "index out of range", where + "/y");
      if (entry.x >= entry.y) fail(ErrorCode::AntisymmetryOrdering, "bracket entries must have x < y", where);
      if (!seen.insert({entry.x, entry.y}).second)
        fail(ErrorCode::InvalidData, "duplicate bracket entry", where);
      const json& terms = field(b, "terms", where);
      if (!terms.is_array()) fail(ErrorCode::InvalidData, "terms must be an array", where + "/terms");
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tw = where + "/terms/" + std::to_string(t);
        const json& term = terms[t];
        if (!term.is_array() || term.size() != 2)
          fail(ErrorCode::InvalidData, "term must be [index, rational]", tw);
        std::size_t k = index_from_json(term[0], tw + "/0");
        if (k >= n) fail(ErrorCode::IndexOutOfRange, "index out of range", tw + "/0");
        entry.terms.push_back({k, rational_from_json(term[1], tw + "/1")});
      }
      entries.push_back(std::move(entry));
    }
  }

  AlgebraDocument doc;
  doc.algebra = LieAlgebra(std::move(labels), entries, JacobiCheck::Deferred);
  auto bad = check_jacobi(doc.algebra);
  if (!bad.empty()) {
    const auto& t = bad.front();
    const auto& l = doc.algebra.labels();
    throw Error(ErrorCode::JacobiViolation,
                "Jacobi identity fails on (" + l[t[0]] + ", " + l[t[1]] + ", " + l[t[2]] + ")",
                "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
  }
  if (auto it = j.find("form"); it != j.end()) doc.form = form_from_json(*it, n, "/form");
  if (auto it = j.find("derivation"); it != j.end()) doc.derivation = matrix_from_json(*it, n, n, "/derivation");
  if (auto it = j.find("structure"); it != j.end()) doc.structure = structure_from_json(*it, n, "/structure");
  return doc;
}

AlgebraDocument parse_algebra_document(std::string_view text, std::size_t max_dim) {
  return document_from_json(parse_json_text(text), max_dim);
}

json to_json(const AlgebraDocument& doc) {
  const LieAlgebra& L = doc.algebra;
  json j;
  j["dim"] = L.dim();
  j["basis"] = L.labels();
  json br = json::array();
  for (const auto& e : L.brackets()) {
    json terms = json::array();
    for (const auto& t : e.terms) terms.push_back(json::array({t.index, rational_to_json(t.coeff)}));
    br.push_back({{"x", e.x}, {"y", e.y}, {"terms", std::move(terms)}});
  }
  j["brackets"] = std::move(br);
  if (doc.form) j["form"] = matrix_to_json(doc.form->matrix());
  if (doc.derivation) j["derivation"] = matrix_to_json(*doc.derivation);
  if (doc.structure) j["structure"] = structure_to_json(*doc.structure);
  return j;
}

namespace {

// Objects one key per line, arrays of scalars on a single line.
void pretty(const json& j, std::string& out, std::size_t depth) {
  const std::string pad(2 * depth, ' '), inner(2 * depth + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += inner + json(it.key()).dump() + ": ";
      pretty(*it, out, depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      pretty(j[i], out, depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string serialize(const AlgebraDocument& doc) {
  std::string out;
  pretty(to_json(doc), out, 0);
  return out + "\n";
}

Matrix parse_matrix_attachment(std::string_view text, std::size_t n, const std::string& key) {
  json j = parse_json_text(text);
  if (j.is_object()) {
    auto it = j.find(key);
    if (it == j.end()) fail(ErrorCode::InvalidData, "missing field \"" + key + "\"", "");
    return matrix_from_json(*it, n, n, "/" + key);
  }
  return matrix_from_json(j, n, n, "");
}

}  // namespace liedual
