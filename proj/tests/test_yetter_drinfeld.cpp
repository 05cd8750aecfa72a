#include <doctest.h>

#include "qhopf/double.hpp"
#include "qhopf/instances.hpp"
#include "qhopf/yetter_drinfeld.hpp"

using namespace qhopf;

namespace {

void yd_suite(const QuasiHopfAlgebra& h, const TensorElement& R) {
  const YDModule reg = module_from_qt(h, R, regular_module(h));
  const YDModule triv = trivial_yd(h);
  CHECK(validate_yd(h, reg).passed());
  CHECK(validate_yd(h, triv).passed());
  const YDModule rr = yd_tensor(h, reg, reg);
  CHECK(validate_yd(h, rr).passed());
  // the functor from modules respects tensor products
  CHECK(module_from_qt(h, R, module_tensor(h, regular_module(h), regular_module(h))).coaction == rr.coaction);
  CHECK(check_braiding_inverse(h, reg, reg).passed());
  CHECK(check_hexagons(h, reg, triv, reg).passed());
  if (h.dim <= 4) CHECK(check_hexagons(h, reg, reg, reg).passed());
  CHECK(check_naturality(h, rr, rr, braiding(h, reg, reg), triv).passed());
}

}  // namespace

TEST_CASE("Yetter-Drinfeld modules from R-matrices") {
  for (const auto& i : bundled_instances()) {
    if (!i.r_matrix || i.algebra.dim > 4) continue;
    CAPTURE(i.name);
    yd_suite(i.algebra, *i.r_matrix);
  }
}

TEST_CASE("Yetter-Drinfeld modules over a genuinely quasi double") {
  const DoubleAlgebra d = build_double(bundled_instance("fZ2w").algebra);
  const QuasiHopfAlgebra& h = d.inner;
  const YDModule reg = module_from_qt(h, d.R.R, regular_module(h));
  CHECK(validate_yd(h, reg).passed());
  CHECK(check_braiding_inverse(h, reg, reg).passed());
  CHECK(check_hexagons(h, reg, trivial_yd(h), reg).passed());
}

TEST_CASE("a grading coaction on kZ2 is Yetter-Drinfeld") {
  // λ(m) = g⊗m on the trivial module k: ε(g) = 1 in kZ2
  const QuasiHopfAlgebra k = bundled_instance("kZ2").algebra;
  YDModule m = trivial_yd(k);
  m.coaction = LinearMap(k.field, {1}, {2, 1}, {k.basis(1).reshaped({2, 1})});
  CHECK(validate_yd(k, m).passed());
}

TEST_CASE("a coaction by an idempotent fails the counit law") {
  // λ(m) = δ_g⊗m over k^{Z2}, where ε(δ_g) = 0
  const QuasiHopfAlgebra f = bundled_instance("fZ2").algebra;
  YDModule m = trivial_yd(f);
  m.coaction = LinearMap(f.field, {1}, {2, 1}, {f.basis(1).reshaped({2, 1})});
  const ValidationReport r = validate_yd(f, m);
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("yd_counit"));
  CHECK_FALSE(r.find("yd_counit")->passed);
}

TEST_CASE("a non-equivariant coaction fails compatibility") {
  // Sweedler: λ(h) = 1⊗h on the regular module is not compatible
  const QuasiHopfAlgebra s = bundled_instance("sweedler").algebra;
  const HModule reg = regular_module(s);
  YDModule m{reg.dim, reg.action, LinearMap::from_function(s.field, {4}, {4, 4}, [&](Key k) {
               return outer(s.unit, s.basis(static_cast<std::uint32_t>(k)));
             })};
  const ValidationReport r = validate_yd(s, m);
  REQUIRE(r.find("yd_compatible"));
  CHECK_FALSE(r.find("yd_compatible")->passed);
}

TEST_CASE("module axioms") {
  const QuasiHopfAlgebra s = bundled_instance("sweedler").algebra;
  CHECK(validate_module(s, regular_module(s)).passed());
  HModule bad = regular_module(s);
  bad.action = LinearMap::from_function(s.field, {4, 4}, {4}, [&](Key k) {
    return s.mul(s.basis(static_cast<std::uint32_t>(k % 4)), s.basis(static_cast<std::uint32_t>(k / 4)));
  });
  CHECK_FALSE(validate_module(s, bad).passed());
}
