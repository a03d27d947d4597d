#include "liedual/rational.hpp"

#include <cctype>

#include "liedual/error.hpp"

namespace liedual {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational ratio(long n, long d) {
  if (d == 0) throw Error(ErrorCode::InvalidData, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::ParseError, "not a rational number: \"" + std::string(text) + "\"");
  std::string n(num), d(den);
  if (n.front() == '+') n.erase(0, 1);
  Integer zn(n, 10), zd(d, 10);
  if (zd == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Rational Covector::operator()(const Vector& x) const { return dot(coords, x); }

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotASubalgebra: return "NotASubalgebra";
    case ErrorCode::InvalidData: return "InvalidData";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotADerivation: return "NotADerivation";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::StructureInvalid: return "StructureInvalid";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
    case ErrorCode::NotReductive: return "NotReductive";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AntisymmetryOrdering: return "AntisymmetryOrdering";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace liedual
