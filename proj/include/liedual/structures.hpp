#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liedual/extensions.hpp"
#include "liedual/polynomial.hpp"

namespace liedual {

/// Nondegenerate invariant form with a nonzero central null vector z.
struct BargmannianStructure {
  SymBilinearForm form;
  Vector z;
  bool operator==(const BargmannianStructure&) const = default;
};

/// Central z and an invariant form h whose radical is exactly span(z).
struct CarrollianStructure {
  Vector z;
  SymBilinearForm h;
  bool operator==(const CarrollianStructure&) const = default;
};

/// Invariant covector tau and a coadjoint-invariant form gamma on the dual
/// space (indexed by the dual basis) whose radical is exactly span(tau).
struct GalileanStructure {
  Covector tau;
  SymBilinearForm gamma;
  bool operator==(const GalileanStructure&) const = default;
};

/// Central z, invariant covector psi with psi(z) = 0, and a form h of which
/// only the restriction to ker psi matters; that restriction must be
/// invariant with radical span(z). h is stored on the whole algebra.
struct LeibnizianStructure {
  Vector z;
  Covector psi;
  SymBilinearForm h;
  bool operator==(const LeibnizianStructure&) const = default;
};

using StructureCertificate =
    std::variant<BargmannianStructure, CarrollianStructure, GalileanStructure, LeibnizianStructure>;

/// Each returns a description of the first violated condition, or nullopt.
std::optional<std::string> bargmannian_violation(const LieAlgebra& L, const BargmannianStructure& s);
std::optional<std::string> carrollian_violation(const LieAlgebra& L, const CarrollianStructure& s);
std::optional<std::string> galilean_violation(const LieAlgebra& L, const GalileanStructure& s);
std::optional<std::string> leibnizian_violation(const LieAlgebra& L, const LeibnizianStructure& s);

bool verify_bargmannian(const LieAlgebra& L, const BargmannianStructure& s);
bool verify_carrollian(const LieAlgebra& L, const CarrollianStructure& s);
bool verify_galilean(const LieAlgebra& L, const GalileanStructure& s);
bool verify_leibnizian(const LieAlgebra& L, const LeibnizianStructure& s);

/// True iff gamma (a form on the dual) is invariant under the coadjoint action.
bool is_coadjoint_invariant(const LieAlgebra& L, const SymBilinearForm& gamma);
/// Basis of the coadjoint-invariant symmetric forms on the dual space.
FormFamily invariant_dual_forms(const LieAlgebra& L);
/// Covectors vanishing on the derived subalgebra.
Subspace invariant_covectors(const LieAlgebra& L);

/// The searches below return verified structures, at most one per central
/// line (or per covector line). When the candidate lines are forced by the
/// common radical of the invariant family, or the center is a line, an empty
/// result is a proof of nonexistence.
std::vector<BargmannianStructure> find_bargmannian(const LieAlgebra& L);
std::vector<CarrollianStructure> find_carrollian(const LieAlgebra& L);
std::vector<GalileanStructure> find_galilean(const LieAlgebra& L);

struct BargmannReduction {
  DoubleExtensionData data;
  LinearMap basis_map;  // double_extend(data).algebra -> L, an isomorphism of metric Lie algebras
};

/// Throws StructureInvalid if s does not verify.
BargmannReduction reduce_bargmannian(const LieAlgebra& L, const BargmannianStructure& s);

struct CarrollAlgebra {
  LieAlgebra algebra;
  CarrollianStructure structure;
};

struct GalileanAlgebra {
  LieAlgebra algebra;
  GalileanStructure structure;
};

/// Z^perp = span(base, Z) with h the restricted form.
CarrollAlgebra carroll_ideal(const DoubleExtension& E);
/// The quotient by span(Z) on basis (base, D), tau = theta^D, gamma = B0^{-1} ⊕ 0.
GalileanAlgebra galilei_quotient(const DoubleExtension& E);

struct CarrollToGalilei {
  GalileanAlgebra result;
  DoubleExtensionData data;
  LinearMap input_map;  // L -> carroll_ideal(double_extend(data)).algebra
};

struct GalileiToCarroll {
  CarrollAlgebra result;
  DoubleExtensionData data;
  LinearMap input_map;  // L -> galilei_quotient(double_extend(data)).algebra
};

/// Throws StructureInvalid if s does not verify.
CarrollToGalilei carroll_to_galilei(const LieAlgebra& L, const CarrollianStructure& s);
/// Splits with the echelon-complement D, normalized to tau(D) = 1.
GalileiToCarroll galilei_to_carroll(const LieAlgebra& L, const GalileanStructure& s);
/// Same, with an explicit splitting vector d (tau(d) must be nonzero).
GalileiToCarroll galilei_to_carroll(const LieAlgebra& L, const GalileanStructure& s, const Vector& d);

struct LeibnizDecomposition {
  CarrollAlgebra carroll;          // ker psi
  LinearMap kernel_inclusion;      // ker psi -> L
  DoubleExtensionData metric;      // (g0, B0, D0) with g0 = ker psi / Rz
  GalileanAlgebra galilean;        // L / Rz, presented as g0 extended by Dbar0
  LinearMap projection;            // L -> galilean.algebra, kernel span(z)
  Derivation d0;                   // from the central-extension cocycle of ker psi
  Derivation dbar0;                // induced by ad_D for psi(D) = 1
  Polynomial d0_char;
  Polynomial dbar0_char;
  bool same_char_poly = false;
  std::vector<BargmannianStructure> bargmannian;
  std::optional<SymBilinearForm> invariant_metric;
};

/// Throws StructureInvalid if s does not verify.
LeibnizDecomposition leibniz_decompose(const LieAlgebra& L, const LeibnizianStructure& s);

}  // namespace liedual
