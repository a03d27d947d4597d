#pragma once

#include <vector>

#include "liedual/forms.hpp"

namespace liedual {

/// A linear endomorphism of a Lie algebra, column j = D e_j. Whether it
/// satisfies the Leibniz rule is a property of the pair (L, D).
using Derivation = Matrix;

bool is_derivation(const LieAlgebra& L, const Derivation& D);
/// D^T B + B D = 0, i.e. B(Dx, y) = -B(x, Dy).
bool is_skew(const SymBilinearForm& B, const Derivation& D);

std::vector<Derivation> derivation_space(const LieAlgebra& L);
std::vector<Derivation> skew_derivation_space(const LieAlgebra& L, const SymBilinearForm& B);

struct SkewDecomposition {
  Vector x;   // element of the semisimple block (ambient coordinates) with D|ss = ad_x
  Matrix t;   // D restricted to the abelian block
};

/// L must be ss ⊕ a with the semisimple block on the first ss_dim basis
/// vectors. Throws DecompositionFailed if D mixes the blocks, is not inner
/// on ss, or is not skew on a.
SkewDecomposition decompose_skew_derivation(const LieAlgebra& L, const SymBilinearForm& B, const Derivation& D,
                                            std::size_t ss_dim);

/// ad_x ⊕ t, the inverse of decompose_skew_derivation.
Derivation reassemble(const LieAlgebra& L, const SkewDecomposition& parts, std::size_t ss_dim);

}  // namespace liedual
