#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/leg_expr.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

/// Structure constants of a finite-dimensional quasi-Hopf algebra on a fixed
/// basis e_0..e_{n-1}.
struct QuasiHopfAlgebra {
  FieldSpec field;
  std::uint32_t dim = 0;
  std::vector<std::string> labels;
  LinearMap mult;     // (n,n) -> (n)
  TensorElement unit; // (n)
  LinearMap comult;   // (n) -> (n,n)
  LinearMap counit;   // (n) -> ()
  TensorElement phi;
  TensorElement phi_inv;
  LinearMap antipode;
  std::optional<LinearMap> antipode_inv;
  TensorElement alpha;
  TensorElement beta;

  Shape shape(std::size_t degree) const { return uniform_shape(dim, degree); }
  TensorElement basis(std::uint32_t i) const;
  /// 1^⊗k
  TensorElement one(std::size_t k = 1) const;
  TensorElement mul(const TensorElement& a, const TensorElement& b) const;
  Scalar eps(const TensorElement& h) const { return counit.apply(h).scalar_value(); }
  /// S⁻¹; throws AntipodeNotInvertible when S is not bijective.
  const LinearMap& s_inv() const;
  /// Σ_i e_i ⊗ e_i: a tag leg followed by a basis leg, used to evaluate an
  /// expression on every basis element at once.
  TensorElement tagged() const;
};

/// Assembles an algebra, computing Φ⁻¹ when not supplied and S⁻¹ when S is
/// bijective. No axioms are checked here.
QuasiHopfAlgebra make_quasi_hopf(FieldSpec field, std::vector<std::string> labels, LinearMap mult, TensorElement unit,
                                 LinearMap comult, LinearMap counit, TensorElement phi,
                                 std::optional<TensorElement> phi_inv, LinearMap antipode, TensorElement alpha,
                                 TensorElement beta);

ValidationReport validate_quasi_bialgebra(const QuasiHopfAlgebra& h);
ValidationReport validate_quasi_hopf(const QuasiHopfAlgebra& h);
/// Both suites in one report.
ValidationReport validate_all(const QuasiHopfAlgebra& h);

/// α ↦ ε(β)α and β ↦ ε(α)β; throws NotNormalizable unless ε(α)ε(β) = 1.
QuasiHopfAlgebra normalize_alpha_beta(QuasiHopfAlgebra h);

/// Exact inverse of S, verified on both sides; throws NotBijective.
LinearMap antipode_inverse(const QuasiHopfAlgebra& h);

struct GaugeTransformation {
  TensorElement F;
  TensorElement F_inv;
};

/// Inverts F and checks the counit normalization; throws ValidationFailed.
GaugeTransformation make_gauge(const QuasiHopfAlgebra& h, TensorElement F);
GaugeTransformation inverse_gauge(const GaugeTransformation& g);

/// (1⊗F)(id⊗Δ)(F) Φ (Δ⊗id)(F⁻¹)(F⁻¹⊗1)
TensorElement twisted_reassociator(const QuasiHopfAlgebra& h, const GaugeTransformation& g);
QuasiHopfAlgebra twist(const QuasiHopfAlgebra& h, const GaugeTransformation& g);

struct DerivedElements {
  TensorElement gamma;
  TensorElement delta;
  TensorElement f;
  TensorElement f_inv;
  TensorElement p_R;
  TensorElement q_R;
};

std::pair<TensorElement, TensorElement> derive_gamma_delta(const QuasiHopfAlgebra& h);
/// f and f⁻¹ from their explicit formulas; f·f⁻¹ = 1⊗1 is checked and a
/// failure raises ValidationFailed.
std::pair<TensorElement, TensorElement> derive_drinfeld_twist(const QuasiHopfAlgebra& h);
std::pair<TensorElement, TensorElement> derive_pq(const QuasiHopfAlgebra& h);
DerivedElements derive_all(const QuasiHopfAlgebra& h);

/// Identity suite for the derived elements: f is an invertible normalized
/// twist conjugating Δ∘S to (S⊗S)∘Δ^cop, relates to α, β through γ, δ and
/// twists Φ to (S⊗S⊗S)(Φ^{321}); p_R and q_R satisfy their intertwining,
/// inverse and reassociator relations.
ValidationReport verify_derived(const QuasiHopfAlgebra& h, const DerivedElements& d);

/// Element of H⊗H with its tensor legs exchanged.
TensorElement flip(const TensorElement& t);

}  // namespace qhopf
