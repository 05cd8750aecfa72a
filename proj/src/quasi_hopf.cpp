#include "qhopf/quasi_hopf.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/linalg.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

namespace {

using Names = std::vector<std::string>;

LegExpr E(const TensorElement& t, Names names) { return LegExpr(t.with_dual_mask(0), std::move(names)); }

}  // namespace

TensorElement QuasiHopfAlgebra::basis(std::uint32_t i) const { return TensorElement::basis(field, {dim}, {i}); }

TensorElement QuasiHopfAlgebra::one(std::size_t k) const { return unit_power(unit, k); }

TensorElement QuasiHopfAlgebra::mul(const TensorElement& a, const TensorElement& b) const {
  return leg_multiply(a, b, mult);
}

const LinearMap& QuasiHopfAlgebra::s_inv() const {
  if (!antipode_inv) throw AntipodeNotInvertible("the antipode is not bijective");
  return *antipode_inv;
}

TensorElement QuasiHopfAlgebra::tagged() const {
  std::vector<TensorElement::Entry> e;
  for (std::uint32_t i = 0; i < dim; ++i) e.emplace_back(Key(i) * dim + i, field.one());
  return TensorElement::from_entries(field, {dim, dim}, std::move(e));
}

TensorElement flip(const TensorElement& t) {
  const std::size_t perm[] = {1, 0};
  return permute_legs(t, perm);
}

QuasiHopfAlgebra make_quasi_hopf(FieldSpec field, std::vector<std::string> labels, LinearMap mult, TensorElement unit,
                                 LinearMap comult, LinearMap counit, TensorElement phi,
                                 std::optional<TensorElement> phi_inv, LinearMap antipode, TensorElement alpha,
                                 TensorElement beta) {
  QuasiHopfAlgebra h;
  h.field = field;
  if (mult.target().size() != 1) throw DimensionMismatch("multiplication must land in H");
  h.dim = mult.target()[0];
  const Shape s1 = h.shape(1), s2 = h.shape(2), s3 = h.shape(3);
  if (mult.source() != s2 || comult.source() != s1 || comult.target() != s2 || counit.source() != s1 ||
      !counit.target().empty() || antipode.source() != s1 || antipode.target() != s1 || unit.shape() != s1 ||
      phi.shape() != s3 || alpha.shape() != s1 || beta.shape() != s1) {
    throw DimensionMismatch("structure maps do not fit a " + std::to_string(h.dim) + "-dimensional algebra");
  }
  if (labels.empty()) {
    for (std::uint32_t i = 0; i < h.dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (labels.size() != h.dim) throw DimensionMismatch("one basis label per basis element required");
  h.labels = std::move(labels);
  h.mult = std::move(mult);
  h.unit = std::move(unit);
  h.comult = std::move(comult);
  h.counit = std::move(counit);
  h.phi = std::move(phi);
  if (phi_inv) {
    if (phi_inv->shape() != s3) throw DimensionMismatch("phi_inv must have degree 3");
    h.phi_inv = std::move(*phi_inv);
  } else {
    h.phi_inv = invert_element(h.phi, h.mult, h.unit);
  }
  h.antipode = std::move(antipode);
  h.alpha = std::move(alpha);
  h.beta = std::move(beta);
  try {
    h.antipode_inv = antipode_inverse(h);
  } catch (const NotBijective&) {
    h.antipode_inv.reset();
  }
  return h;
}

LinearMap antipode_inverse(const QuasiHopfAlgebra& h) {
  auto inv = invert_map(h.antipode);
  if (!inv) throw NotBijective("the antipode matrix is singular");
  const LinearMap id = LinearMap::identity(h.field, h.shape(1));
  if (h.antipode.after(*inv) != id || inv->after(h.antipode) != id) throw NotBijective("antipode inverse check failed");
  return *inv;
}

ValidationReport validate_quasi_bialgebra(const QuasiHopfAlgebra& h) {
  ValidationReport r("quasi_bialgebra");
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim;
  const LinearMap id = LinearMap::identity(f, h.shape(1));
  const LinearMap& m = h.mult;
  const LinearMap& d = h.comult;

  compare_maps(r, "associativity", m.after(m.tensor(id)), m.after(id.tensor(m)));

  {
    auto left = LinearMap::from_function(f, h.shape(1), h.shape(1), [&](Key k) {
      return m.apply(outer(h.unit, h.basis(static_cast<std::uint32_t>(k))));
    });
    auto right = LinearMap::from_function(f, h.shape(1), h.shape(1), [&](Key k) {
      return m.apply(outer(h.basis(static_cast<std::uint32_t>(k)), h.unit));
    });
    compare_maps(r, "unit", left, id);
    compare_maps(r, "unit", right, id);
  }

  {
    auto prod = LinearMap::from_function(f, h.shape(2), h.shape(2), [&](Key k) {
      return leg_multiply(d.column(k / n), d.column(k % n), m);
    });
    compare_maps(r, "comult_multiplicative", d.after(m), prod);
    r.expect_equal("comult_unital", d.apply(h.unit), h.one(2));
    compare_maps(r, "counit_multiplicative", h.counit.after(m), h.counit.tensor(h.counit));
    r.expect_equal("counit_unital", h.counit.apply(h.unit), TensorElement::scalar(f.one()));
  }

  r.expect_equal("phi_invertible", h.mul(h.phi, h.phi_inv), h.one(3));
  r.expect_equal("phi_invertible", h.mul(h.phi_inv, h.phi), h.one(3));

  {
    // (id⊗Δ)Δ(h) = Φ (Δ⊗id)Δ(h) Φ⁻¹
    LegExpr lhs = E(h.tagged(), {"t", "h"});
    lhs.split(d, "h", "a", "b").split(d, "b", "b", "c");
    LegExpr rhs = E(h.tagged(), {"t", "h"});
    rhs.split(d, "h", "a", "c").split(d, "a", "a", "b");
    rhs.left_multiply(h.phi, m, {"a", "b", "c"}).right_multiply({"a", "b", "c"}, h.phi_inv, m);
    r.expect_equal("quasi_coassociativity", lhs.take({"t", "a", "b", "c"}), rhs.take({"t", "a", "b", "c"}));
  }

  compare_maps(r, "counit_laws", id.tensor(h.counit).after(d), id);
  compare_maps(r, "counit_laws", h.counit.tensor(id).after(d), id);

  {
    // (1⊗Φ)(id⊗Δ⊗id)(Φ)(Φ⊗1) = (id⊗id⊗Δ)(Φ)(Δ⊗id⊗id)(Φ)
    LegExpr lhs = E(h.phi, {"1", "2", "4"});
    lhs.split(d, "2", "2", "3");
    lhs.left_multiply(h.phi, m, {"2", "3", "4"});
    lhs.right_multiply({"1", "2", "3"}, h.phi, m);
    LegExpr rhs = E(h.phi, {"1", "2", "3"});
    rhs.split(d, "3", "3", "4");
    LegExpr second = E(h.phi, {"p", "3'", "4'"});
    second.split(d, "p", "1'", "2'");
    rhs = rhs * second;
    for (const char* leg : {"1", "2", "3", "4"}) rhs.apply(m, {leg, std::string(leg) + "'"}, {leg});
    r.expect_equal("pentagon", lhs.take({"1", "2", "3", "4"}), rhs.take({"1", "2", "3", "4"}));
  }

  r.expect_equal("phi_normalization", apply_on_leg(h.counit, h.phi, 1), h.one(2));
  r.expect_equal("phi_outer_normalization", apply_on_leg(h.counit, h.phi, 0), h.one(2));
  r.expect_equal("phi_outer_normalization", apply_on_leg(h.counit, h.phi, 2), h.one(2));
  return r;
}

ValidationReport validate_quasi_hopf(const QuasiHopfAlgebra& h) {
  ValidationReport r("quasi_hopf");
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim;
  const LinearMap& m = h.mult;
  const LinearMap& s = h.antipode;

  r.expect_equal("antipode_unital", s.apply(h.unit), h.unit);
  {
    auto rev = LinearMap::from_function(f, h.shape(2), h.shape(1), [&](Key k) {
      return m.apply(outer(s.column(k % n), s.column(k / n)));
    });
    compare_maps(r, "antipode_antimultiplicative", s.after(m), rev);
  }
  {
    // S(h₁)αh₂ = ε(h)α and h₁βS(h₂) = ε(h)β
    LegExpr a = E(h.tagged(), {"t", "h"}) * E(h.alpha, {"al"});
    a.split(h.comult, "h", "h1", "h2").map(s, "h1").merge(m, "v", {"h1", "al", "h2"});
    LegExpr ea = E(h.tagged(), {"t", "h"}).contract(h.counit, "h") * E(h.alpha, {"v"});
    r.expect_equal("antipode_alpha", a.take({"t", "v"}), ea.take({"t", "v"}));
    LegExpr b = E(h.tagged(), {"t", "h"}) * E(h.beta, {"be"});
    b.split(h.comult, "h", "h1", "h2").map(s, "h2").merge(m, "v", {"h1", "be", "h2"});
    LegExpr eb = E(h.tagged(), {"t", "h"}).contract(h.counit, "h") * E(h.beta, {"v"});
    r.expect_equal("antipode_beta", b.take({"t", "v"}), eb.take({"t", "v"}));
  }
  {
    // X¹βS(X²)αX³ = 1 and S(x¹)αx²βS(x³) = 1
    LegExpr a = E(h.phi, {"1", "2", "3"}) * E(h.beta, {"b"}) * E(h.alpha, {"a"});
    a.map(s, "2").merge(m, "v", {"1", "b", "2", "a", "3"});
    r.expect_equal("antipode_reassociator", a.take({"v"}), h.unit);
    LegExpr b = E(h.phi_inv, {"1", "2", "3"}) * E(h.alpha, {"a"}) * E(h.beta, {"b"});
    b.map(s, "1").map(s, "3").merge(m, "v", {"1", "a", "2", "b", "3"});
    r.expect_equal("antipode_reassociator", b.take({"v"}), h.unit);
  }
  {
    DenseMatrix sm = DenseMatrix::from_map(s);
    auto piv = independent_columns(sm);
    if (piv.size() == n) {
      r.pass("antipode_bijective");
    } else {
      std::uint32_t dep = 0;
      while (dep < piv.size() && piv[dep] == dep) ++dep;
      r.fail("antipode_bijective", {dep},
             "rank " + std::to_string(piv.size()) + " < " + std::to_string(n) + "; column " + std::to_string(dep) +
                 " depends on earlier columns");
    }
  }
  compare_maps(r, "counit_antipode", h.counit.after(s), h.counit);
  r.record("eps_alpha_beta", (h.eps(h.alpha) * h.eps(h.beta)).is_one(), {},
           "eps(alpha)eps(beta) = " + (h.eps(h.alpha) * h.eps(h.beta)).to_string());
  return r;
}

ValidationReport validate_all(const QuasiHopfAlgebra& h) {
  ValidationReport r = validate_quasi_bialgebra(h);
  r.append(validate_quasi_hopf(h));
  return r;
}

QuasiHopfAlgebra normalize_alpha_beta(QuasiHopfAlgebra h) {
  const Scalar ea = h.eps(h.alpha), eb = h.eps(h.beta);
  if (!(ea * eb).is_one()) throw NotNormalizable("eps(alpha)eps(beta) = " + (ea * eb).to_string() + " != 1");
  h.alpha = eb * h.alpha;
  h.beta = ea * h.beta;
  return h;
}

GaugeTransformation make_gauge(const QuasiHopfAlgebra& h, TensorElement F) {
  if (F.shape() != h.shape(2)) throw DimensionMismatch("a gauge transformation lives in H⊗H");
  if (apply_on_leg(h.counit, F, 0) != h.unit || apply_on_leg(h.counit, F, 1) != h.unit) {
    throw ValidationFailed("gauge_normalization", "(eps⊗id)(F) or (id⊗eps)(F) differs from 1");
  }
  TensorElement inv = invert_element(F, h.mult, h.unit);
  return GaugeTransformation{std::move(F), std::move(inv)};
}

GaugeTransformation inverse_gauge(const GaugeTransformation& g) { return GaugeTransformation{g.F_inv, g.F}; }

TensorElement twisted_reassociator(const QuasiHopfAlgebra& h, const GaugeTransformation& g) {
  const LinearMap& d = h.comult;
  TensorElement t = embed_legs(g.F, {2, 3}, 3, h.unit);
  t = h.mul(t, apply_on_leg(d, g.F, 1));
  t = h.mul(t, h.phi);
  t = h.mul(t, apply_on_leg(d, g.F_inv, 0));
  return h.mul(t, embed_legs(g.F_inv, {1, 2}, 3, h.unit));
}

QuasiHopfAlgebra twist(const QuasiHopfAlgebra& h, const GaugeTransformation& g) {
  const LinearMap& m = h.mult;
  const LinearMap& d = h.comult;
  QuasiHopfAlgebra t = h;
  t.comult = LinearMap::from_function(h.field, h.shape(1), h.shape(2),
                                      [&](Key k) { return h.mul(h.mul(g.F, d.column(k)), g.F_inv); });
  t.phi = twisted_reassociator(h, g);
  // (F⊗1)(Δ⊗id)(F) Φ⁻¹ (id⊗Δ)(F⁻¹)(1⊗F⁻¹)
  TensorElement pi = embed_legs(g.F, {1, 2}, 3, h.unit);
  pi = h.mul(pi, apply_on_leg(d, g.F, 0));
  pi = h.mul(pi, h.phi_inv);
  pi = h.mul(pi, apply_on_leg(d, g.F_inv, 1));
  t.phi_inv = h.mul(pi, embed_legs(g.F_inv, {2, 3}, 3, h.unit));
  LegExpr a = E(g.F_inv, {"1", "2"}) * E(h.alpha, {"a"});
  a.map(h.antipode, "1").merge(m, "v", {"1", "a", "2"});
  t.alpha = a.take({"v"});
  LegExpr b = E(g.F, {"1", "2"}) * E(h.beta, {"b"});
  b.map(h.antipode, "2").merge(m, "v", {"1", "b", "2"});
  t.beta = b.take({"v"});
  return t;
}

std::pair<TensorElement, TensorElement> derive_gamma_delta(const QuasiHopfAlgebra& h) {
  const LinearMap& m = h.mult;
  const LinearMap& s = h.antipode;
  // A = (Φ⊗1)(Δ⊗id⊗id)(Φ⁻¹), γ = S(A²)αA³ ⊗ S(A¹)αA⁴
  LegExpr a = E(h.phi_inv, {"A1", "A3", "A4"});
  a.split(h.comult, "A1", "A1", "A2").left_multiply(h.phi, m, {"A1", "A2", "A3"});
  a = a * E(h.alpha, {"al1"}) * E(h.alpha, {"al2"});
  a.map(s, "A1").map(s, "A2").merge(m, "L", {"A2", "al1", "A3"}).merge(m, "R", {"A1", "al2", "A4"});
  // B = (Δ⊗id⊗id)(Φ)(Φ⁻¹⊗1), δ = B¹βS(B⁴) ⊗ B²βS(B³)
  LegExpr b = E(h.phi, {"B1", "B3", "B4"});
  b.split(h.comult, "B1", "B1", "B2").right_multiply({"B1", "B2", "B3"}, h.phi_inv, m);
  b = b * E(h.beta, {"be1"}) * E(h.beta, {"be2"});
  b.map(s, "B4").map(s, "B3").merge(m, "L", {"B1", "be1", "B4"}).merge(m, "R", {"B2", "be2", "B3"});
  return {a.take({"L", "R"}), b.take({"L", "R"})};
}

std::pair<TensorElement, TensorElement> derive_drinfeld_twist(const QuasiHopfAlgebra& h) {
  const LinearMap& m = h.mult;
  const LinearMap& s = h.antipode;
  const auto [gamma, delta] = derive_gamma_delta(h);
  // f = (S⊗S)(Δ^op x¹) γ Δ(x²βS(x³))
  LegExpr f = E(h.phi_inv, {"x1", "x2", "x3"}) * E(h.beta, {"be"});
  f.map(s, "x3").merge(m, "v", {"x2", "be", "x3"}).split(h.comult, "v", "v1", "v2");
  f.split(h.comult, "x1", "u1", "u2").map(s, "u1").map(s, "u2");
  f = f * E(gamma, {"g1", "g2"});
  f.merge(m, "L", {"u2", "g1", "v1"}).merge(m, "R", {"u1", "g2", "v2"});
  // f⁻¹ = Δ(S(x¹)αx²) δ (S⊗S)(Δ^cop(x³))
  LegExpr g = E(h.phi_inv, {"x1", "x2", "x3"}) * E(h.alpha, {"al"});
  g.map(s, "x1").merge(m, "w", {"x1", "al", "x2"}).split(h.comult, "w", "w1", "w2");
  g.split(h.comult, "x3", "z1", "z2").map(s, "z1").map(s, "z2");
  g = g * E(delta, {"d1", "d2"});
  g.merge(m, "L", {"w1", "d1", "z2"}).merge(m, "R", {"w2", "d2", "z1"});
  TensorElement ft = f.take({"L", "R"}), gt = g.take({"L", "R"});
  if (h.mul(ft, gt) != h.one(2) || h.mul(gt, ft) != h.one(2)) {
    throw ValidationFailed("twist_invertible", "f·f⁻¹ != 1⊗1; the input algebra is inconsistent");
  }
  return {ft, gt};
}

std::pair<TensorElement, TensorElement> derive_pq(const QuasiHopfAlgebra& h) {
  const LinearMap& m = h.mult;
  const LinearMap& sinv = h.s_inv();
  // p_R = x¹ ⊗ x²βS(x³), q_R = X¹ ⊗ S⁻¹(αX³)X²
  LegExpr p = E(h.phi_inv, {"1", "2", "3"}) * E(h.beta, {"b"});
  p.map(h.antipode, "3").merge(m, "R", {"2", "b", "3"});
  LegExpr q = E(h.phi, {"1", "2", "3"}) * E(h.alpha, {"a"});
  q.merge(m, "3", {"a", "3"}).map(sinv, "3").merge(m, "R", {"3", "2"});
  return {p.take({"1", "R"}), q.take({"1", "R"})};
}

DerivedElements derive_all(const QuasiHopfAlgebra& h) {
  DerivedElements d;
  std::tie(d.gamma, d.delta) = derive_gamma_delta(h);
  std::tie(d.f, d.f_inv) = derive_drinfeld_twist(h);
  std::tie(d.p_R, d.q_R) = derive_pq(h);
  return d;
}

ValidationReport verify_derived(const QuasiHopfAlgebra& h, const DerivedElements& dv) {
  ValidationReport r("derived");
  const LinearMap& m = h.mult;
  const LinearMap& d = h.comult;
  const LinearMap& s = h.antipode;
  const LinearMap& sinv = h.s_inv();
  const Names tv = {"t", "1", "2"};

  r.expect_equal("twist_invertible", h.mul(dv.f, dv.f_inv), h.one(2));
  r.expect_equal("twist_invertible", h.mul(dv.f_inv, dv.f), h.one(2));
  r.expect_equal("twist_normalized", apply_on_leg(h.counit, dv.f, 0), h.unit);
  r.expect_equal("twist_normalized", apply_on_leg(h.counit, dv.f, 1), h.unit);

  {
    // f Δ(S(h)) f⁻¹ = (S⊗S)(Δ^cop(h))
    LegExpr lhs = E(h.tagged(), {"t", "h"});
    lhs.map(s, "h").split(d, "h", "1", "2").left_multiply(dv.f, m, {"1", "2"}).right_multiply({"1", "2"}, dv.f_inv, m);
    LegExpr rhs = E(h.tagged(), {"t", "h"});
    rhs.split(d, "h", "2", "1").map(s, "1").map(s, "2");
    r.expect_equal("twist_antipode", lhs.take(tv), rhs.take(tv));
  }

  r.expect_equal("twist_gamma_delta", h.mul(dv.f, d.apply(h.alpha)), dv.gamma);
  r.expect_equal("twist_gamma_delta", h.mul(d.apply(h.beta), dv.f_inv), dv.delta);

  {
    const TensorElement phi_f = twisted_reassociator(h, GaugeTransformation{dv.f, dv.f_inv});
    LegExpr x = E(h.phi, {"3", "2", "1"});
    x.map(s, "1").map(s, "2").map(s, "3");
    r.expect_equal("twist_reassociator", phi_f, x.take({"1", "2", "3"}));
  }

  {
    // Δ(h₁)p_R[1⊗S(h₂)] = p_R[h⊗1]
    LegExpr lhs = E(h.tagged(), {"t", "h"});
    lhs.split(d, "h", "h1", "h2").split(d, "h1", "1", "2").map(s, "h2");
    lhs.right_multiply({"1", "2"}, dv.p_R, m).merge(m, "2", {"2", "h2"});
    LegExpr rhs = E(h.tagged(), {"t", "h"}) * E(dv.p_R, {"1", "2"});
    rhs.merge(m, "1", {"1", "h"});
    r.expect_equal("pq_intertwine", lhs.take(tv), rhs.take(tv));
    // [1⊗S⁻¹(h₂)] q_R Δ(h₁) = (h⊗1) q_R
    LegExpr lq = E(h.tagged(), {"t", "h"});
    lq.split(d, "h", "h1", "h2").split(d, "h1", "1", "2").map(sinv, "h2");
    lq.left_multiply(dv.q_R, m, {"1", "2"}).merge(m, "2", {"h2", "2"});
    LegExpr rq = E(h.tagged(), {"t", "h"}) * E(dv.q_R, {"1", "2"});
    rq.merge(m, "1", {"h", "1"});
    r.expect_equal("pq_intertwine", lq.take(tv), rq.take(tv));
  }

  {
    // Δ(q¹)p_R[1⊗S(q²)] = 1⊗1 and [1⊗S⁻¹(p²)]q_RΔ(p¹) = 1⊗1
    LegExpr a = E(dv.q_R, {"q1", "q2"});
    a.split(d, "q1", "1", "2").map(s, "q2").right_multiply({"1", "2"}, dv.p_R, m).merge(m, "2", {"2", "q2"});
    r.expect_equal("pq_inverse", a.take({"1", "2"}), h.one(2));
    LegExpr b = E(dv.p_R, {"p1", "p2"});
    b.split(d, "p1", "1", "2").map(sinv, "p2").left_multiply(dv.q_R, m, {"1", "2"}).merge(m, "2", {"p2", "2"});
    r.expect_equal("pq_inverse", b.take({"1", "2"}), h.one(2));
  }

  {
    // (q_R⊗1)(Δ⊗id)(q_R)Φ⁻¹ = [1⊗S⁻¹(X³)⊗S⁻¹(X²)][1⊗S⁻¹(f²)⊗S⁻¹(f¹)](id⊗Δ)(q_RΔ(X¹))
    LegExpr lhs = E(dv.q_R, {"1", "3"});
    lhs.split(d, "1", "1", "2").left_multiply(dv.q_R, m, {"1", "2"}).right_multiply({"1", "2", "3"}, h.phi_inv, m);
    LegExpr rhs = E(h.phi, {"X1", "X2", "X3"}) * E(dv.q_R, {"1", "b"}) * E(dv.f, {"f1", "f2"});
    rhs.split(d, "X1", "a", "c").merge(m, "1", {"1", "a"}).merge(m, "b", {"b", "c"}).split(d, "b", "2", "3");
    rhs.map(sinv, "X2").map(sinv, "X3").map(sinv, "f1").map(sinv, "f2");
    rhs.merge(m, "2", {"X3", "f2", "2"}).merge(m, "3", {"X2", "f1", "3"});
    r.expect_equal("q_reassociator", lhs.take({"1", "2", "3"}), rhs.take({"1", "2", "3"}));
  }

  {
    // Φ(Δ⊗id)(p_R)(p_R⊗1) = (id⊗Δ)(Δ(x¹)p_R)(1⊗f⁻¹)(1⊗S(x³)⊗S(x²))
    LegExpr lhs = E(dv.p_R, {"1", "3"});
    lhs.split(d, "1", "1", "2").right_multiply({"1", "2"}, dv.p_R, m).left_multiply(h.phi, m, {"1", "2", "3"});
    LegExpr rhs = E(h.phi_inv, {"x1", "x2", "x3"}) * E(dv.p_R, {"p1", "p2"}) * E(dv.f_inv, {"g1", "g2"});
    rhs.split(d, "x1", "a", "b").merge(m, "1", {"a", "p1"}).merge(m, "c", {"b", "p2"}).split(d, "c", "2", "3");
    rhs.map(s, "x3").map(s, "x2").merge(m, "2", {"2", "g1", "x3"}).merge(m, "3", {"3", "g2", "x2"});
    r.expect_equal("p_reassociator", lhs.take({"1", "2", "3"}), rhs.take({"1", "2", "3"}));
  }

  {
    // q¹₁x¹ ⊗ q¹₂x² ⊗ q²x³ = Y¹ ⊗ q¹Y²₁ ⊗ S⁻¹(Y³)q²Y²₂
    LegExpr lhs = E(dv.q_R, {"1", "3"});
    lhs.split(d, "1", "1", "2").right_multiply({"1", "2", "3"}, h.phi_inv, m);
    LegExpr rhs = E(h.phi, {"1", "Y2", "Y3"}) * E(dv.q_R, {"q1", "q2"});
    rhs.split(d, "Y2", "a", "b").map(sinv, "Y3").merge(m, "2", {"q1", "a"}).merge(m, "3", {"Y3", "q2", "b"});
    r.expect_equal("q_phi_relation", lhs.take({"1", "2", "3"}), rhs.take({"1", "2", "3"}));
  }

  {
    // X¹p¹₁ ⊗ X²p¹₂ ⊗ X³p² = x¹ ⊗ x²₁p¹ ⊗ x²₂p²S(x³)
    LegExpr lhs = E(dv.p_R, {"1", "3"});
    lhs.split(d, "1", "1", "2").left_multiply(h.phi, m, {"1", "2", "3"});
    LegExpr rhs = E(h.phi_inv, {"1", "x2", "x3"}) * E(dv.p_R, {"p1", "p2"});
    rhs.split(d, "x2", "a", "b").map(s, "x3").merge(m, "2", {"a", "p1"}).merge(m, "3", {"b", "p2", "x3"});
    r.expect_equal("p_phi_relation", lhs.take({"1", "2", "3"}), rhs.take({"1", "2", "3"}));
  }
  return r;
}

}  // namespace qhopf
