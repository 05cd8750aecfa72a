#include <doctest.h>

#include "qhopf/dual.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/instances.hpp"
#include "qhopf/tensor_ops.hpp"

using namespace qhopf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

TensorElement t2(std::vector<TensorElement::Entry> e) { return TensorElement::from_entries(Q, {2, 2}, std::move(e)); }

bool fails_with(const ValidationReport& r, const std::string& label) {
  const CheckResult* c = r.find(label);
  return c && !c->passed;
}

}  // namespace

TEST_CASE("every bundled instance validates") {
  const auto all = bundled_instances();
  CHECK(all.size() == bundled_names().size());
  for (const auto& i : all) {
    CAPTURE(i.name);
    CHECK(validate_all(i.algebra).passed());
    CHECK(verify_derived(i.algebra, derive_all(i.algebra)).passed());
  }
  CHECK_THROWS_AS(bundled_instance("nope"), Error);
}

TEST_CASE("groups and cocycles") {
  const Group z2 = cyclic_group(2);
  const Group v4 = direct_product(z2, z2);
  validate_group(v4);
  CHECK(v4.order == 4);
  CHECK(cocycle_defect(z2, cyclic_cocycle(z2, Q.from_int(-1))).empty());
  const FieldSpec F7 = FieldSpec::prime(7);
  const Group z3 = cyclic_group(3);
  CHECK(cocycle_defect(z3, cyclic_cocycle(z3, F7.from_int(2))).empty());
  ThreeCocycle bad = trivial_cocycle(z2, Q);
  bad.values[7] = Q.from_int(2);
  CHECK_FALSE(cocycle_defect(z2, bad).empty());
  CHECK_THROWS_AS(function_algebra(z2, bad), CocycleInvalid);
  Group broken = z2;
  broken.table[3] = 1;
  CHECK_THROWS(validate_group(broken));
}

TEST_CASE("the twisted function algebra on Z2 is genuinely quasi") {
  const QuasiHopfAlgebra h = bundled_instance("fZ2w").algebra;
  CHECK(h.phi != h.one(3));
  // β = δ_e + ω(g,g,g)δ_g
  CHECK(h.beta == TensorElement::from_entries(Q, {2}, {{0, Q.one()}, {1, Q.from_int(-1)}}));
  CHECK(h.alpha == h.unit);
}

TEST_CASE("frozen derived elements of the twisted function algebra on Z2") {
  // computed by the library, checked by hand from ω(g,g,g) = -1
  const QuasiHopfAlgebra h = bundled_instance("fZ2w").algebra;
  const DerivedElements d = derive_all(h);
  const Scalar one = Q.one(), m1 = Q.from_int(-1);
  CHECK(d.f == t2({{0, one}, {1, one}, {2, one}, {3, m1}}));
  CHECK(d.f_inv == d.f);
  // p_R(x,y) = ω(x,y,y⁻¹)ω(y,y⁻¹,y)
  CHECK(d.p_R == t2({{0, one}, {1, m1}, {2, one}, {3, one}}));
  CHECK(d.q_R == t2({{0, one}, {1, one}, {2, one}, {3, m1}}));
  CHECK(d.gamma == t2({{0, one}, {1, one}, {2, one}, {3, m1}}));
  CHECK(d.delta == t2({{0, one}, {1, m1}, {2, m1}, {3, m1}}));
}

TEST_CASE("Hopf instances have trivial derived elements") {
  for (const char* name : {"kZ2", "kZ2xZ2", "sweedler", "fZ2"}) {
    CAPTURE(name);
    const QuasiHopfAlgebra h = bundled_instance(name).algebra;
    const DerivedElements d = derive_all(h);
    CHECK(d.f == h.one(2));
    CHECK(d.p_R == h.one(2));
    CHECK(d.q_R == h.one(2));
  }
}

TEST_CASE("Sweedler's algebra") {
  const QuasiHopfAlgebra h = sweedler_hopf(Q);
  const TensorElement x = h.basis(2);
  CHECK(h.eps(x).is_zero());
  CHECK(h.eps(h.basis(1)).is_one());
  // S²(x) = -x = gxg⁻¹
  const TensorElement s2x = h.antipode.apply(h.antipode.apply(x));
  CHECK(s2x == Q.from_int(-1) * x);
  CHECK(s2x == h.mul(h.mul(h.basis(1), x), h.basis(1)));
  CHECK_THROWS_AS(sweedler_hopf(FieldSpec::prime(2)), BadCharacteristic);
}

TEST_CASE("the untwisted function algebra is the dual of the group algebra") {
  const Group z2 = cyclic_group(2), v4 = direct_product(z2, z2);
  for (const Group& g : {z2, v4}) {
    const QuasiHopfAlgebra kg = group_algebra(g, Q);
    const QuasiHopfAlgebra fg = function_algebra(g, trivial_cocycle(g, Q));
    const DualStructure d = build_dual(kg);
    CHECK(flatten(d.convolution) == flatten(fg.mult));
    CHECK(d.comult == fg.comult);
    CHECK(d.counit.with_dual_mask(0) == fg.unit);
    CHECK(d.s_bar == fg.antipode);
  }
}

TEST_CASE("cohomologous cocycles give gauge-equivalent algebras") {
  // Φ_F coefficient at (x,y,z) is ω⁻¹ F(y,z)F(x,yz)/(F(xy,z)F(x,y)), so
  // twisting by F realizes ω' = ω·F(xy,z)F(x,y)/(F(y,z)F(x,yz)).
  auto check = [](const Group& g, const ThreeCocycle& w, const std::vector<Scalar>& F) {
    const FieldSpec f = w.field;
    const QuasiHopfAlgebra h = function_algebra(g, w);
    const std::uint32_t n = g.order;
    std::vector<TensorElement::Entry> e;
    for (std::uint32_t k = 0; k < n * n; ++k) e.emplace_back(k, F[k]);
    const GaugeTransformation gt = make_gauge(h, TensorElement::from_entries(f, {n, n}, e));
    const QuasiHopfAlgebra t = twist(h, gt);
    CHECK(validate_all(t).passed());
    ThreeCocycle w2 = w;
    auto Fv = [&](std::uint32_t a, std::uint32_t b) { return F[a * n + b]; };
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z)
          w2.values[(x * n + y) * n + z] =
              w(x, y, z) * Fv(g.mul(x, y), z) * Fv(x, y) / (Fv(y, z) * Fv(x, g.mul(y, z)));
    CHECK(cocycle_defect(g, w2).empty());
    const QuasiHopfAlgebra target = function_algebra(g, w2);
    CHECK(t.phi == target.phi);
    CHECK(t.comult == target.comult);
    CHECK(t.mult == target.mult);
  };
  const Group z2 = cyclic_group(2);
  check(z2, cyclic_cocycle(z2, Q.from_int(-1)), {Q.one(), Q.one(), Q.one(), Q.from_int(3)});
  const FieldSpec F7 = FieldSpec::prime(7);
  const Group z3 = cyclic_group(3);
  std::vector<Scalar> F(9, F7.one());
  F[4] = F7.from_int(3);  // F(1,1)
  F[5] = F7.from_int(5);  // F(1,2)
  check(z3, cyclic_cocycle(z3, F7.from_int(2)), F);
  check(z3, trivial_cocycle(z3, F7), F);
}

TEST_CASE("twisting by F then F⁻¹ returns the algebra") {
  const QuasiHopfAlgebra h = bundled_instance("sweedler").algebra;
  // F = 1⊗1 + x⊗gx keeps the counit normalization
  TensorElement F = h.one(2) + outer(h.basis(2), h.basis(3));
  const GaugeTransformation g = make_gauge(h, F);
  const QuasiHopfAlgebra t = twist(h, g);
  CHECK(validate_all(t).passed());
  CHECK(t.phi != h.phi);
  const QuasiHopfAlgebra back = twist(t, inverse_gauge(g));
  CHECK(back.comult == h.comult);
  CHECK(back.phi == h.phi);
  CHECK_THROWS_AS(make_gauge(h, Q.from_int(2) * h.one(2)), ValidationFailed);
}

TEST_CASE("normalize_alpha_beta") {
  QuasiHopfAlgebra h = group_algebra(cyclic_group(2), Q);
  h.alpha = Q.from_int(2) * h.unit;
  h.beta = Q.from_ratio(1, 2) * h.unit;
  CHECK(validate_all(h).passed());
  const QuasiHopfAlgebra n = normalize_alpha_beta(h);
  CHECK(n.alpha == h.unit);
  CHECK(n.beta == h.unit);
  h.beta = Q.from_int(3) * h.unit;
  CHECK_THROWS_AS(normalize_alpha_beta(h), NotNormalizable);
}

TEST_CASE("negative instances fail with their label and a witness") {
  const auto neg = negative_instances();
  REQUIRE(neg.size() == 4);
  for (const auto& n : neg) {
    CAPTURE(n.name);
    const ValidationReport r = validate_all(n.algebra);
    CHECK_FALSE(r.passed());
    REQUIRE(fails_with(r, n.expected_label));
    CHECK_FALSE(r.find(n.expected_label)->witness.empty());
  }
}

TEST_CASE("validation reports keep the first failure per label") {
  ValidationReport r("x");
  r.record("a", true);
  r.record("a", false, {1, 2});
  r.record("a", false, {3});
  r.record("b", true);
  CHECK_FALSE(r.passed());
  CHECK(r.find("a")->witness == std::vector<std::uint32_t>{1, 2});
  CHECK(r.failures() == std::vector<std::string>{"a"});
  CHECK_THROWS_AS(require_valid(r), ValidationFailed);
}
