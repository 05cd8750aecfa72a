#include "qhopf/quasitriangular.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

namespace {

using Names = std::vector<std::string>;

LegExpr E(const TensorElement& t, Names names) { return LegExpr(t.with_dual_mask(0), std::move(names)); }

/// Multiplies each named leg on the right by the matching component of t.
void times(LegExpr& e, const Names& legs, const TensorElement& t, const LinearMap& m) { e.right_multiply(legs, t, m); }

}  // namespace

RMatrix make_r_matrix(const QuasiHopfAlgebra& h, const TensorElement& R) {
  return RMatrix{R, invert_element(R, h.mult, h.unit)};
}

std::pair<TensorElement, TensorElement> derive_u(const QuasiHopfAlgebra& h, const TensorElement& R,
                                                 const TensorElement& p_R) {
  const LinearMap& m = h.mult;
  const LinearMap& s = h.antipode;
  LegExpr u = E(R, {"R1", "R2"}) * E(p_R, {"p1", "p2"}) * E(h.alpha, {"al"});
  u.merge(m, "a", {"R2", "p2"}).map(s, "a").merge(m, "b", {"R1", "p1"}).merge(m, "u", {"a", "al", "b"});
  LegExpr v = E(h.phi, {"X1", "X2", "X3"}) * E(R, {"R1", "R2"}) * E(p_R, {"p1", "p2"}) * E(h.alpha, {"al"});
  v.merge(m, "c", {"X2", "R1", "p1"}).map(s, "c").merge(m, "c", {"c", "al", "X3"}).map(s, "c");
  v.merge(m, "v", {"X1", "R2", "p2", "c"});
  TensorElement ut = u.take({"u"}), vt = v.take({"v"});
  if (h.mul(ut, vt) != h.unit || h.mul(vt, ut) != h.unit) {
    throw ValidationFailed("u_inverse", "u and the displayed u⁻¹ are not mutually inverse");
  }
  return {ut, vt};
}

bool check_ext(const QuasiHopfAlgebra& h, const TensorElement& R, const TensorElement& f, const TensorElement& f_inv) {
  const LinearMap& s = h.antipode;
  TensorElement lhs = h.mul(h.mul(flip(f), R), f_inv);
  return lhs == apply_on_legs({&s, &s}, R);
}

QTCertificate validate_r_matrix(const QuasiHopfAlgebra& h, const TensorElement& R) {
  return validate_r_matrix(h, R, derive_all(h));
}

QTCertificate validate_r_matrix(const QuasiHopfAlgebra& h, const TensorElement& R, const DerivedElements& dv) {
  QTCertificate cert;
  ValidationReport& r = cert.report;
  const LinearMap& m = h.mult;
  const LinearMap& d = h.comult;
  if (R.shape() != h.shape(2)) throw DimensionMismatch("an R-matrix lives in H⊗H");

  {
    // (Δ⊗id)(R) = X²R¹x¹Y¹ ⊗ X³x³r¹Y² ⊗ X¹R²x²r²Y³
    LegExpr rhs = E(h.phi, {"X1", "X2", "X3"}) * E(R, {"R1", "R2"});
    rhs.merge(m, "a", {"X2", "R1"}).merge(m, "c", {"X1", "R2"}).rename("X3", "b");
    times(rhs, {"a", "b", "c"}, permute_legs(h.phi_inv, std::vector<std::size_t>{0, 2, 1}), m);
    times(rhs, {"b", "c"}, R, m);
    times(rhs, {"a", "b", "c"}, h.phi, m);
    r.expect_equal("r_comult_left", apply_on_leg(d, R, 0), rhs.take({"a", "b", "c"}));
  }
  {
    // (id⊗Δ)(R) = x³R¹X²r¹y¹ ⊗ x¹X¹r²y² ⊗ x²R²X³y³
    LegExpr rhs = E(h.phi_inv, {"x1", "x2", "x3"}) * E(R, {"R1", "R2"});
    rhs.merge(m, "a", {"x3", "R1"}).merge(m, "c", {"x2", "R2"}).rename("x1", "b");
    times(rhs, {"a", "b", "c"}, permute_legs(h.phi, std::vector<std::size_t>{1, 0, 2}), m);
    times(rhs, {"a", "b"}, R, m);
    times(rhs, {"a", "b", "c"}, h.phi_inv, m);
    r.expect_equal("r_comult_right", apply_on_leg(d, R, 1), rhs.take({"a", "b", "c"}));
  }
  {
    // Δ^op(h)R = RΔ(h)
    LegExpr lhs = E(h.tagged(), {"t", "h"});
    lhs.split(d, "h", "2", "1").right_multiply({"1", "2"}, R, m);
    LegExpr rhs = E(h.tagged(), {"t", "h"});
    rhs.split(d, "h", "1", "2").left_multiply(R, m, {"1", "2"});
    r.expect_equal("r_quasi_cocommutative", lhs.take({"t", "1", "2"}), rhs.take({"t", "1", "2"}));
  }
  r.expect_equal("r_counit", apply_on_leg(h.counit, R, 0), h.unit);
  r.expect_equal("r_counit", apply_on_leg(h.counit, R, 1), h.unit);

  try {
    cert.r = make_r_matrix(h, R);
    r.pass("r_invertible");
  } catch (const NotInvertible& e) {
    r.fail("r_invertible", {}, e.what());
  }

  try {
    auto [u, ui] = derive_u(h, R, dv.p_R);
    r.pass("u_inverse");
    r.record("u_counit", h.eps(u).is_one(), {}, "eps(u) = " + h.eps(u).to_string());
    const LinearMap s2 = h.antipode.after(h.antipode);
    bool ok = true;
    for (std::uint32_t i = 0; i < h.dim && ok; ++i) {
      ok = r.expect_equal("u_square_antipode", s2.column(i), h.mul(h.mul(u, h.basis(i)), ui), {i});
    }
    cert.u = u;
    cert.u_inv = ui;
  } catch (const ValidationFailed& e) {
    r.fail("u_inverse", {}, e.what());
  }

  {
    const LinearMap& s = h.antipode;
    r.expect_equal("r_antipode_twist", h.mul(h.mul(flip(dv.f), R), dv.f_inv), apply_on_legs({&s, &s}, R));
  }
  return cert;
}

}  // namespace qhopf
