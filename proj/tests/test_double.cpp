#include <doctest.h>

#include "oracles.hpp"
#include "qhopf/double.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/tensor_ops.hpp"

using namespace qhopf;

TEST_CASE("dual structures verify") {
  for (const char* name : {"kZ2", "fZ2w", "sweedler", "semion", "kZ3"}) {
    CAPTURE(name);
    const QuasiHopfAlgebra h = bundled_instance(name).algebra;
    CHECK(verify_dual(h, build_dual(h)).passed());
  }
}

TEST_CASE("frozen dual values on kZ2") {
  const QuasiHopfAlgebra h = bundled_instance("kZ2").algebra;
  const DualStructure d = build_dual(h);
  const FieldSpec Q = h.field;
  // Δ̂(e^g) = e^e⊗e^g + e^g⊗e^e
  CHECK(d.comult.column(1).with_dual_mask(0) == TensorElement::from_entries(Q, {2, 2}, {{1, Q.one()}, {2, Q.one()}}));
  // e^e · e^e = e^e
  const TensorElement ee = dual_basis(h, 0);
  CHECK(convolution(d, ee, ee).with_dual_mask(0) == ee.with_dual_mask(0));
  CHECK(convolution(d, ee, dual_basis(h, 1)).is_zero());
}

TEST_CASE("classical double matches the Drinfeld double oracle") {
  for (const char* name : {"kZ2", "kZ3", "sweedler", "fZ2", "kZ2xZ2"}) {
    CAPTURE(name);
    const QuasiHopfAlgebra h = bundled_instance(name).algebra;
    const DoubleAlgebra d = build_double_unchecked(h);
    CHECK(d.inner.mult == oracle::double_mult(h));
    CHECK(d.inner.comult == oracle::double_comult(h));
  }
}

TEST_CASE("frozen double values on kZ2") {
  // basis e^e⋈e, e^e⋈g, e^g⋈e, e^g⋈g
  const DoubleAlgebra d = build_double(bundled_instance("kZ2").algebra);
  const FieldSpec Q = d.base.field;
  CHECK(d.inner.dim == 4);
  CHECK(d.inner.comult.column(2) == TensorElement::from_entries(Q, {4, 4}, {{0 * 4 + 2, Q.one()}, {2 * 4 + 0, Q.one()}}));
  CHECK(d.inner.mult.column(0) == TensorElement::basis(Q, {4}, {0}));
  CHECK(d.inner.antipode.column(3) == TensorElement::basis(Q, {4}, {3}));
  CHECK(d.inclusion.column(1) == d.inner.basis(1) + d.inner.basis(3));
}

TEST_CASE("doubles of the small instances pass every suite") {
  for (const char* name : {"kZ2", "fZ2", "fZ2w", "sweedler", "semion", "kZ3", "fZ3w"}) {
    CAPTURE(name);
    const DoubleAlgebra d = build_double_unchecked(bundled_instance(name).algebra);
    const ValidationReport r = verify_double(d);
    for (const auto& c : r.checks()) {
      CAPTURE(c.label);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("frozen values on the double of the twisted function algebra") {
  const DoubleAlgebra d = build_double(bundled_instance("fZ2w").algebra);
  const FieldSpec Q = d.base.field;
  const Scalar one = Q.one(), m1 = Q.from_int(-1);
  // ε = e^{δ_e}, so α_D = ε⋈1 and β_D = ε⋈(δ_e - δ_g)
  CHECK(d.inner.alpha == TensorElement::from_entries(Q, {4}, {{0, one}, {1, one}}));
  CHECK(d.inner.beta == TensorElement::from_entries(Q, {4}, {{0, one}, {1, m1}}));
  // R_D = Σ (ε⋈δ_x) ⊗ (e^x⋈1) up to the sign ω(g,g,g) on the last term
  CHECK(d.R.R == TensorElement::from_entries(Q, {4, 4}, {{0, one}, {1, one}, {6, one}, {7, m1}}));
}

TEST_CASE("double construction requires a bijective antipode") {
  const auto neg = negative_instances();
  for (const auto& n : neg) {
    if (n.expected_label != "antipode_bijective") continue;
    CHECK_THROWS_AS(build_double_unchecked(n.algebra), AntipodeNotInvertible);
  }
}
