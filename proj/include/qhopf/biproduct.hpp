#pragma once

#include "qhopf/double.hpp"
#include "qhopf/yetter_drinfeld.hpp"

namespace qhopf {

/// A Hopf algebra in the category of left Yetter-Drinfeld modules over H,
/// on the basis of its underlying module.
struct BraidedHopfAlgebra {
  YDModule module;
  LinearMap mult;     // (d,d) -> (d)
  TensorElement unit; // (d)
  LinearMap comult;   // (d) -> (d,d)
  LinearMap counit;   // (d) -> ()
  LinearMap antipode;
  std::optional<LinearMap> antipode_inv;

  std::uint32_t dim() const { return module.dim; }
};

/// Module and comodule axioms, all structure maps YD morphisms, associativity
/// and coassociativity up to the associator, the braided bialgebra law and
/// the antipode laws.
ValidationReport validate_braided_hopf(const QuasiHopfAlgebra& h, const BraidedHopfAlgebra& b);

/// Quasi-Hopf algebra maps H ⇄ A with π∘i = id_H.
struct QuasiHopfProjection {
  QuasiHopfAlgebra H;
  DerivedElements derived;  // of H
  QuasiHopfAlgebra A;
  LinearMap i;   // (n) -> (N)
  LinearMap pi;  // (N) -> (n)
};

QuasiHopfProjection make_projection(const QuasiHopfAlgebra& h, const QuasiHopfAlgebra& a, LinearMap i, LinearMap pi);

/// Algebra, unit, coproduct, counit, reassociator, α, β and antipode
/// preservation for f: src -> tgt. Labels are prefixed.
ValidationReport verify_quasi_hopf_map(const QuasiHopfAlgebra& src, const QuasiHopfAlgebra& tgt, const LinearMap& f,
                                       const std::string& prefix);

/// π(φ⋈h) = φ(q²R¹) q¹R²h
LinearMap projection_pi(const DoubleAlgebra& d, const TensorElement& R);

/// π∘i = id together with verify_quasi_hopf_map for both i and π; when R
/// is given, also (π⊗π)(R_D) = R. Stage "pi".
ValidationReport verify_projection(const QuasiHopfProjection& p, const TensorElement* R_D = nullptr,
                                   const TensorElement* R = nullptr);

/// a∘a' = i(X¹) a i(S(x¹X²)αx²X³₁) a' i(S(x³X³₂)) as (N,N) -> (N).
LinearMap circ_product(const QuasiHopfProjection& p);
/// h▷a = i(h₁) a i(S(h₂)) as (n,N) -> (N).
LinearMap adjoint_action(const QuasiHopfProjection& p);
/// Π(a) = a₁ i(βS(π(a₂)))
LinearMap big_pi(const QuasiHopfProjection& p);
/// Both sides of the membership condition Σ a₁⊗π(a₂) = i(x¹)a i(S(x³₂X³)f¹) ⊗ x²X¹βS(x³₁X²)f²,
/// as maps (N) -> (N, n).
std::pair<LinearMap, LinearMap> membership_sides(const QuasiHopfProjection& p);
/// λ(b) = X¹Y¹₁π(b₁)g¹S(q²Y²₂)Y³ ⊗ i(X²Y¹₂)b₂i(g²S(X³q¹Y²₁)) as (N) -> (n, N).
LinearMap projection_coaction(const QuasiHopfProjection& p);
/// S̲(b) = i(π(b₁)β)S_A(b₂) as (N) -> (N).
LinearMap projection_antipode(const QuasiHopfProjection& p);
/// χ(b×h) = i(X¹) b i(S(X²)αX³h) as (N, n) -> (N).
LinearMap chi_general(const QuasiHopfProjection& p);

/// B^i transported to H* through μ(b) = (id⊗ε)(b), μ⁻¹(φ) = Π(φ⋈1).
struct Extraction {
  QuasiHopfProjection projection;
  LinearMap circ;
  LinearMap adjoint;
  LinearMap Pi;
  LinearMap mu;      // (N) -> (n)
  LinearMap mu_inv;  // (n) -> (N)
  std::uint32_t rank = 0;
  BraidedHopfAlgebra B;
  ValidationReport report{"bi"};
};

/// Throws RankMismatch if dim im(Π) differs from dim H. Closure of B^i
/// under every structure map is recorded in the report, as are the
/// membership condition, μ bijectivity, the Π rules, the ∘-algebra and
/// module-algebra laws and Π(Π(a)∘a') = Π(a)∘Π(a').
Extraction bi_extract(const DoubleAlgebra& d, const TensorElement& R);

/// The closed forms for H̲* (action, coaction, product, coproduct, counit,
/// antipode; unit ε).
BraidedHopfAlgebra braided_dual(const DoubleAlgebra& d, const TensorElement& R);

/// Structure-by-structure equality of two braided Hopf algebras on the same
/// basis. Stage "transport".
ValidationReport compare_braided(const BraidedHopfAlgebra& a, const BraidedHopfAlgebra& b);

/// Π(φ⋈1) = y¹x¹⇀φ↼S⁻¹(y³R¹x²₁p¹) ⋈ y²R²x²₂p²S(x³) as (n) -> (N).
LinearMap projection_closed_form(const DoubleAlgebra& d, const TensorElement& R);
/// ε(h') (X¹₁x¹⇀φ↼S⁻¹(f²X³))(X¹₂x²h₁⇀Ψ↼S⁻¹(f¹X²x³h₂)) as (N, N) -> (n): the H*-part of a product in D(H).
LinearMap product_dual_part(const DoubleAlgebra& d);

/// B×H on the basis b_k × e_j, flat index k·n + j, without validation.
QuasiHopfAlgebra build_biproduct_unchecked(const QuasiHopfAlgebra& h, const BraidedHopfAlgebra& b);
/// Same, running validate_all; throws ValidationFailed.
QuasiHopfAlgebra build_biproduct(const QuasiHopfAlgebra& h, const BraidedHopfAlgebra& b);

/// χ(φ×h) = x¹X¹⇀φ↼S⁻¹(x³R¹X²) ⋈ x²R²X³h as (N) -> (N).
LinearMap chi_iso(const DoubleAlgebra& d, const TensorElement& R);
/// χ bijective and a quasi-Hopf map B×H -> D(H). Stage "chi".
ValidationReport verify_chi(const QuasiHopfAlgebra& biproduct, const DoubleAlgebra& d, const LinearMap& chi);

/// R := (π⊗π)(R_D) for a projection π covering i_D, certified against H.
QTCertificate r_from_projection(const DoubleAlgebra& d, const LinearMap& pi);

}  // namespace qhopf
