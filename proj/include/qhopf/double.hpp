#pragma once

#include "qhopf/dual.hpp"
#include "qhopf/quasitriangular.hpp"

namespace qhopf {

/// D(H) = H* ⋈ H on the basis e^i ⋈ e_j, flat index i·n + j.
struct DoubleAlgebra {
  QuasiHopfAlgebra base;
  DerivedElements derived;  // of the base
  DualStructure dual;       // of the base
  QuasiHopfAlgebra inner;   // D(H) itself
  LinearMap inclusion;      // i_D: H -> D(H), h ↦ ε ⋈ h
  TensorElement omega;      // Ω ∈ H^⊗5
  TensorElement U;          // g¹S(q²) ⊗ g²S(q¹)
  TensorElement generating; // **D** ∈ H ⊗ D(H)
  RMatrix R;                // (i_D ⊗ id)(**D**)

  std::uint32_t index(std::uint32_t dual_index, std::uint32_t h_index) const { return dual_index * base.dim + h_index; }
};

/// X¹_(1,1)y¹x¹ ⊗ X¹_(1,2)y²x²₁ ⊗ X¹₂y³x²₂ ⊗ S⁻¹(f¹X²x³) ⊗ S⁻¹(f²X³)
TensorElement compute_omega(const QuasiHopfAlgebra& h, const DerivedElements& d);

/// Structure maps of D(H) from their closed formulas. No identities are
/// checked; throws AntipodeNotInvertible when S is not bijective.
DoubleAlgebra build_double_unchecked(const QuasiHopfAlgebra& h);

/// The quasi-Hopf suite, the R-matrix certificate of R_D and the relations
/// tying D(H) to H. Structural code is "double".
ValidationReport verify_double(const DoubleAlgebra& d);

/// build_double_unchecked followed by verify_double; throws ValidationFailed
/// on the first failing check.
DoubleAlgebra build_double(const QuasiHopfAlgebra& h);

/// Only the relations between H and D(H): i_D is a quasi-Hopf morphism, the
/// coproduct, counit and antipode rules for **D**, the left action of H and
/// the p/q helper identities.
ValidationReport verify_generating_relations(const DoubleAlgebra& d);

/// e^i ⋈ h as an element of D(H).
TensorElement double_element(const DoubleAlgebra& d, const TensorElement& phi, const TensorElement& h);

}  // namespace qhopf
