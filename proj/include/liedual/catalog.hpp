#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liedual/structures.hpp"

namespace liedual {

LieAlgebra abelian(std::size_t m);
/// [e1, e2] = e3 and cyclic.
LieAlgebra su2();
/// lambda * (-Killing) = 2 lambda I on su2.
SymBilinearForm su2_form(const Rational& lambda);

/// su2 ⊕ ... ⊕ su2 ⊕ abelian(m) with form (-lambda_i Killing) ⊕ I.
struct ReductiveAlgebra {
  LieAlgebra algebra;
  SymBilinearForm form;
  std::size_t ss_dim = 0;
  std::vector<Rational> lambdas;
};
ReductiveAlgebra compact_reductive(const std::vector<Rational>& lambdas, std::size_t m);

enum class KinematicalFamily { Static, S0, Carroll, Galilei, Bargmann, GalileiAB, BargmannAB };

struct KinematicalSpec {
  std::size_t n = 1;
  KinematicalFamily family = KinematicalFamily::Carroll;
  Rational alpha;
  Rational beta;
};

/// Basis (L_ab for a < b lexicographic, B_a, P_a, H[, M]); s0 has no H.
/// Throws InvalidSpec if n == 0.
LieAlgebra kinematical(const KinematicalSpec& spec);
std::size_t kinematical_rotation_dim(std::size_t n);

LieAlgebra carroll_algebra(std::size_t n);
LieAlgebra galilei_algebra(std::size_t n);
LieAlgebra bargmann_algebra(std::size_t n);

struct LeibnizExample {
  LieAlgebra algebra;
  LeibnizianStructure structure;
};

/// Basis (e1, e2, e3, e4, e+, e-); z = e+, psi = theta^-, h = sum (theta^i)^2.
LeibnizExample leibniz_counterexample(const Rational& alpha, const Rational& beta, const Rational& gamma);

/// Double extension from indexed data: f are the structure constants of the
/// base, eta its metric, and omega_ab = <D0 X_a, X_b>, so that
/// [X_a, X_b] = f_ab^c X_c + omega_ab X+ and [X-, X_a] = X_b omega^b_a with
/// omega^c_a = eta^{cb} omega_ab. Throws InvalidData naming the offending
/// index triple.
DoubleExtension indexed_double_extension(const LieAlgebra& f, const SymBilinearForm& eta, const Matrix& omega);

/// A named catalog entry with its optional attachments.
struct CatalogItem {
  LieAlgebra algebra;
  std::optional<SymBilinearForm> form;
  std::optional<Matrix> derivation;
  std::optional<StructureCertificate> structure;
};

/// Names accepted by catalog_lookup with a short argument synopsis.
std::vector<std::pair<std::string, std::string>> catalog_names();
/// Throws InvalidSpec for unknown names or bad arguments.
CatalogItem catalog_lookup(const std::string& name, const std::vector<std::string>& args);

}  // namespace liedual
