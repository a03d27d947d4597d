#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "liedual/error.hpp"
#include "liedual/structures.hpp"

namespace liedual {

/// One algebra plus optional attachments. With a form and a derivation the
/// document also encodes a DoubleExtensionData.
struct AlgebraDocument {
  LieAlgebra algebra;
  std::optional<SymBilinearForm> form;
  std::optional<Matrix> derivation;
  std::optional<StructureCertificate> structure;

  bool operator==(const AlgebraDocument&) const = default;
};

inline constexpr std::size_t default_max_dim = 64;

/// LIEDUAL_MAX_DIM, or the default when unset. Throws InvalidSpec if malformed.
std::size_t max_dim_from_env();

/// Parses and validates a document. Syntax errors carry "line:column";
/// validation errors carry a JSON pointer or the violating index triple.
AlgebraDocument parse_algebra_document(std::string_view text, std::size_t max_dim = default_max_dim);
AlgebraDocument document_from_json(const nlohmann::json& j, std::size_t max_dim = default_max_dim);

nlohmann::json to_json(const AlgebraDocument& doc);
/// Canonical text: sorted keys and indices, reduced rationals, zero terms dropped.
std::string serialize(const AlgebraDocument& doc);

nlohmann::json rational_to_json(const Rational& q);
nlohmann::json vector_to_json(const Vector& v);
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json structure_to_json(const StructureCertificate& s);

Rational rational_from_json(const nlohmann::json& j, const std::string& pointer);
Vector vector_from_json(const nlohmann::json& j, std::size_t n, const std::string& pointer);
Matrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols, const std::string& pointer);

/// Parses JSON text, reporting syntax errors with "line:column".
nlohmann::json parse_json_text(std::string_view text);

/// A square matrix given either bare or under `key` in a JSON object.
Matrix parse_matrix_attachment(std::string_view text, std::size_t n, const std::string& key);

}  // namespace liedual
