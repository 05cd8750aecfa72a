#pragma once

#include <optional>

#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

/// H* on the dual basis e^0..e^{n-1}. Elements of H* are degree-1 tensors
/// with the dual bit set on their leg.
struct DualStructure {
  std::uint32_t dim = 0;
  LinearMap comult;       // Δ̂: (n) -> (n,n), dual to the multiplication
  TensorElement counit;   // ε as an element of H*
  LinearMap left_hit;     // (h, φ) ↦ h⇀φ, ⟨h⇀φ, h'⟩ = φ(h'h)
  LinearMap right_hit;    // (φ, h) ↦ φ↼h, ⟨φ↼h, h'⟩ = φ(hh')
  LinearMap dual_left;    // (φ, h) ↦ φ⇀h = φ(h₂)h₁
  LinearMap dual_right;   // (h, φ) ↦ h↼φ = φ(h₁)h₂
  LinearMap convolution;  // (φ, ψ) ↦ φψ, ⟨φψ, h⟩ = φ(h₁)ψ(h₂)
  LinearMap s_bar;        // ⟨S̄φ, h⟩ = ⟨φ, S(h)⟩
  std::optional<LinearMap> s_bar_inv;
};

/// Throws AntipodeNotInvertible only when asked for S̄⁻¹ via require_inverse.
DualStructure build_dual(const QuasiHopfAlgebra& h, bool require_inverse = false);

/// Coassociativity and counit of Δ̂, the four arrow formulas, bimodule
/// compatibility, S̄ as a coalgebra antimorphism and the quasi-associativity
/// of the convolution, all on the full basis.
ValidationReport verify_dual(const QuasiHopfAlgebra& h, const DualStructure& d);

TensorElement convolution(const DualStructure& d, const TensorElement& phi, const TensorElement& psi);

/// e^i as an element of H*.
TensorElement dual_basis(const QuasiHopfAlgebra& h, std::uint32_t i);

}  // namespace qhopf
