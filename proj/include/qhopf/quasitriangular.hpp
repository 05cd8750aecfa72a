#pragma once

#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

struct RMatrix {
  TensorElement R;
  TensorElement R_inv;
};

/// Outcome of certifying (H, R); `report` holds one entry per identity.
struct QTCertificate {
  ValidationReport report{"quasitriangular"};
  std::optional<RMatrix> r;
  std::optional<TensorElement> u;
  std::optional<TensorElement> u_inv;

  bool certified() const { return report.passed(); }
  bool holds(const std::string& label) const {
    const CheckResult* c = report.find(label);
    return c && c->passed;
  }
};

/// Checks both comultiplication identities for R, quasi-cocommutativity on
/// every basis element and the counit conditions; inverts R; derives u and
/// checks ε(u) = 1, S² = u(·)u⁻¹ and f₂₁Rf⁻¹ = (S⊗S)(R).
QTCertificate validate_r_matrix(const QuasiHopfAlgebra& h, const TensorElement& R);
QTCertificate validate_r_matrix(const QuasiHopfAlgebra& h, const TensorElement& R, const DerivedElements& d);

/// u = S(R²p²)αR¹p¹ and u⁻¹ = X¹R²p²S(S(X²R¹p¹)αX³); throws ValidationFailed
/// unless they are mutually inverse.
std::pair<TensorElement, TensorElement> derive_u(const QuasiHopfAlgebra& h, const TensorElement& R,
                                                 const TensorElement& p_R);

/// f₂₁ R f⁻¹ == (S⊗S)(R)
bool check_ext(const QuasiHopfAlgebra& h, const TensorElement& R, const TensorElement& f, const TensorElement& f_inv);

RMatrix make_r_matrix(const QuasiHopfAlgebra& h, const TensorElement& R);

}  // namespace qhopf
