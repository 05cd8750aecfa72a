#pragma once

#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

/// A left H-module on the basis m_0..m_{d-1}; action is (n, d) -> (d).
struct HModule {
  std::uint32_t dim = 0;
  LinearMap action;
};

/// A left H-module with a left H-coaction m ↦ m₍₋₁₎ ⊗ m₍₀₎, (d) -> (n, d).
struct YDModule {
  std::uint32_t dim = 0;
  LinearMap action;
  LinearMap coaction;

  HModule module() const { return {dim, action}; }
};

/// k with h·1 = ε(h) and coaction 1 ⊗ id.
YDModule trivial_yd(const QuasiHopfAlgebra& h);
/// H acting on itself by left multiplication.
HModule regular_module(const QuasiHopfAlgebra& h);

/// Unit and associativity of the action.
ValidationReport validate_module(const QuasiHopfAlgebra& h, const HModule& m);
/// The module axioms, quasi-coassociativity of the coaction, its counit
/// law and the compatibility of action and coaction, on every basis pair.
ValidationReport validate_yd(const QuasiHopfAlgebra& h, const YDModule& m);

/// M ⊗ N with diagonal action; basis m_i ⊗ n_j has flat index i·dim N + j.
HModule module_tensor(const QuasiHopfAlgebra& h, const HModule& m, const HModule& n);
/// M ⊗ N with the tensor-product coaction.
YDModule yd_tensor(const QuasiHopfAlgebra& h, const YDModule& m, const YDModule& n);

/// c_{M,N}(m⊗n) = m₍₋₁₎·n ⊗ m₍₀₎ as a map (dim M · dim N) -> (dim N · dim M).
LinearMap braiding(const QuasiHopfAlgebra& h, const YDModule& m, const YDModule& n);
/// c⁻¹_{M,N}: N⊗M -> M⊗N; throws AntipodeNotInvertible.
LinearMap braiding_inverse(const QuasiHopfAlgebra& h, const YDModule& m, const YDModule& n);

/// a_{U,V,W}((u⊗v)⊗w) = Φ·(u⊗(v⊗w)) on the flattened triple product, and
/// its inverse (action of Φ⁻¹).
LinearMap associator(const QuasiHopfAlgebra& h, const HModule& u, const HModule& v, const HModule& w);
LinearMap associator_inverse(const QuasiHopfAlgebra& h, const HModule& u, const HModule& v, const HModule& w);

/// λ(b) = R² ⊗ R¹·b
YDModule module_from_qt(const QuasiHopfAlgebra& h, const TensorElement& R, const HModule& m);

/// f commutes with the actions and coactions.
bool is_yd_morphism(const QuasiHopfAlgebra& h, const YDModule& m, const YDModule& n, const LinearMap& f);

/// c ∘ c⁻¹ and c⁻¹ ∘ c are identities on both orders of the pair.
ValidationReport check_braiding_inverse(const QuasiHopfAlgebra& h, const YDModule& m, const YDModule& n);
/// Both hexagon identities for the triple (U, V, W).
ValidationReport check_hexagons(const QuasiHopfAlgebra& h, const YDModule& u, const YDModule& v, const YDModule& w);
/// c_{N,M'} ∘ (id⊗f) = (f⊗id) ∘ c_{N,M} and c_{M',N} ∘ (f⊗id) = (id⊗f) ∘ c_{M,N}
/// for a YD morphism f: M -> M'.
ValidationReport check_naturality(const QuasiHopfAlgebra& h, const YDModule& m, const YDModule& m2,
                                  const LinearMap& f, const YDModule& n);

}  // namespace qhopf
