#include <doctest.h>

#include "oracles.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/linalg.hpp"
#include "qhopf/tensor_ops.hpp"
#include "qhopf/yetter_drinfeld.hpp"

using namespace qhopf;

namespace {

struct Case {
  std::string name;
  QuasiHopfAlgebra h;
  TensorElement R;
};

std::vector<Case> certified() {
  std::vector<Case> out;
  for (const char* n : {"kZ2", "fZ2", "sweedler", "semion"}) {
    NamedInstance i = bundled_instance(n);
    out.push_back({n, i.algebra, *i.r_matrix});
  }
  return out;
}

void all_pass(const ValidationReport& r) {
  for (const auto& c : r.checks()) {
    CAPTURE(c.label);
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("the projection is a quasitriangular quasi-Hopf morphism") {
  for (const auto& c : certified()) {
    CAPTURE(c.name);
    const DoubleAlgebra d = build_double(c.h);
    const QuasiHopfProjection p = make_projection(c.h, d.inner, d.inclusion, projection_pi(d, c.R));
    all_pass(verify_projection(p, &d.R.R, &c.R));
    const QTCertificate back = r_from_projection(d, p.pi);
    CHECK(back.certified());
    CHECK(back.r->R == c.R);
  }
}

TEST_CASE("kZ2 with R = 1⊗1: π(φ⋈h) = φ(1)h") {
  const NamedInstance k = bundled_instance("kZ2");
  const DoubleAlgebra d = build_double(k.algebra);
  const LinearMap pi = projection_pi(d, *k.r_matrix);
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j) {
      // e^i(1) = δ_{i,e}
      const TensorElement expect = i == 0 ? k.algebra.basis(j) : TensorElement(k.algebra.field, {2});
      CHECK(pi.column(d.index(i, j)) == expect);
    }
}

TEST_CASE("a non-quasitriangular R breaks the projection") {
  const QuasiHopfAlgebra s = bundled_instance("sweedler").algebra;
  const DoubleAlgebra d = build_double(s);
  const QuasiHopfProjection p = make_projection(s, d.inner, d.inclusion, projection_pi(d, s.one(2)));
  CHECK_FALSE(verify_projection(p, nullptr, nullptr).passed());
}

TEST_CASE("extraction of the braided Hopf algebra") {
  for (const auto& c : certified()) {
    CAPTURE(c.name);
    const DoubleAlgebra d = build_double(c.h);
    const Extraction x = bi_extract(d, c.R);
    CHECK(x.rank == c.h.dim);
    all_pass(x.report);
    // Π is idempotent and Π(1) = i(β)
    CHECK(x.Pi.after(x.Pi) == x.Pi);
    CHECK(x.Pi.apply(d.inner.unit) == d.inclusion.apply(c.h.beta));
  }
}

TEST_CASE("closed forms on the dual equal the transported structures") {
  for (const auto& c : certified()) {
    CAPTURE(c.name);
    const DoubleAlgebra d = build_double(c.h);
    const Extraction x = bi_extract(d, c.R);
    const BraidedHopfAlgebra b = braided_dual(d, c.R);
    all_pass(validate_braided_hopf(c.h, b));
    all_pass(compare_braided(x.B, b));
    CHECK(module_from_qt(c.h, c.R, b.module.module()).coaction == b.module.coaction);
    CHECK(projection_closed_form(d, c.R) == x.mu_inv);
    CHECK(product_dual_part(d) == x.mu.after(d.inner.mult));
  }
}

TEST_CASE("group algebra with trivial R: the braided dual is H* with trivial coaction") {
  const NamedInstance k = bundled_instance("kZ2");
  const DoubleAlgebra d = build_double(k.algebra);
  const BraidedHopfAlgebra b = braided_dual(d, *k.r_matrix);
  const DualStructure& ds = d.dual;
  CHECK(flatten(b.mult) == flatten(ds.convolution));
  for (std::uint32_t i = 0; i < 2; ++i) CHECK(b.module.coaction.column(i) == outer(k.algebra.unit, k.algebra.basis(i)));
  // ε̲(φ) = φ(1)
  CHECK(b.counit.column(0).scalar_value().is_one());
  CHECK(b.counit.column(1).scalar_value().is_zero());
}

TEST_CASE("biproduct against Radford's construction") {
  for (const char* name : {"kZ2", "fZ2", "sweedler"}) {
    CAPTURE(name);
    const NamedInstance i = bundled_instance(name);
    const DoubleAlgebra d = build_double(i.algebra);
    const BraidedHopfAlgebra b = braided_dual(d, *i.r_matrix);
    const QuasiHopfAlgebra bp = build_biproduct(i.algebra, b);
    const oracle::Radford r = oracle::radford(i.algebra, b);
    CHECK(bp.mult == r.mult);
    CHECK(bp.comult == r.comult);
    CHECK(bp.antipode == r.antipode);
  }
}

TEST_CASE("biproduct with the trivial braided Hopf algebra is H") {
  const QuasiHopfAlgebra h = bundled_instance("fZ2w").algebra;
  BraidedHopfAlgebra k;
  const FieldSpec f = h.field;
  k.module = trivial_yd(h);
  k.mult = LinearMap(f, {1, 1}, {1}, {TensorElement::basis(f, {1}, {0})});
  k.unit = TensorElement::basis(f, {1}, {0});
  k.comult = LinearMap(f, {1}, {1, 1}, {TensorElement::basis(f, {1, 1}, {0, 0})});
  k.counit = LinearMap(f, {1}, {}, {TensorElement::scalar(f.one())});
  k.antipode = LinearMap::identity(f, {1});
  all_pass(validate_braided_hopf(h, k));
  const QuasiHopfAlgebra bp = build_biproduct(h, k);
  CHECK(bp.mult == h.mult);
  CHECK(bp.comult == h.comult);
  CHECK(bp.phi == h.phi);
  CHECK(bp.antipode == h.antipode);
}

TEST_CASE("chi is a quasi-Hopf isomorphism") {
  for (const auto& c : certified()) {
    CAPTURE(c.name);
    const DoubleAlgebra d = build_double(c.h);
    const BraidedHopfAlgebra b = braided_dual(d, c.R);
    const QuasiHopfAlgebra bp = build_biproduct(c.h, b);
    const LinearMap chi = chi_iso(d, c.R);
    all_pass(verify_chi(bp, d, chi));
    const Extraction x = bi_extract(d, c.R);
    const LinearMap id = LinearMap::identity(c.h.field, {c.h.dim});
    CHECK(flatten(chi_general(x.projection).after(x.mu_inv.tensor(id))) == chi);
  }
}

TEST_CASE("chi is the identity for kZ2 with trivial R") {
  const NamedInstance k = bundled_instance("kZ2");
  const DoubleAlgebra d = build_double(k.algebra);
  CHECK(chi_iso(d, *k.r_matrix) == LinearMap::identity(k.algebra.field, {4}));
}

TEST_CASE("the quasi double case") {
  const DoubleAlgebra base = build_double(bundled_instance("fZ2w").algebra);
  const QuasiHopfAlgebra& h = base.inner;
  const TensorElement& R = base.R.R;
  const DoubleAlgebra d = build_double(h);
  const QuasiHopfProjection p = make_projection(h, d.inner, d.inclusion, projection_pi(d, R));
  all_pass(verify_projection(p, &d.R.R, &R));
  const Extraction x = bi_extract(d, R);
  all_pass(x.report);
  const BraidedHopfAlgebra b = braided_dual(d, R);
  all_pass(compare_braided(x.B, b));
  const QuasiHopfAlgebra bp = build_biproduct_unchecked(h, b);
  all_pass(validate_all(bp));
  all_pass(verify_chi(bp, d, chi_iso(d, R)));
}
