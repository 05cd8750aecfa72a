#include "qhopf/biproduct.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/linalg.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

namespace {

using Names = std::vector<std::string>;

LegExpr E(const TensorElement& t, Names names) { return LegExpr(t.with_dual_mask(0), std::move(names)); }

LegExpr tag(FieldSpec f, std::uint32_t d, const std::string& t, const std::string& leg) {
  return LegExpr(diagonal(f, d), {t, leg});
}

LinearMap id_map(FieldSpec f, std::uint32_t d) { return LinearMap::identity(f, {d}); }

/// The linear map k -> V sending 1 to v.
LinearMap point(const TensorElement& v) {
  return LinearMap(v.field(), {1}, {static_cast<std::uint32_t>(shape_size(v.shape()))},
                   {v.with_dual_mask(0).reshaped({static_cast<std::uint32_t>(shape_size(v.shape()))})});
}

TensorElement element_power(const TensorElement& e, std::size_t k) { return unit_power(e, k); }

/// Applies a map (N)->(n) to each leg of a mixed tensor where needed.
TensorElement map_all(const LinearMap& m, const TensorElement& e) {
  std::vector<const LinearMap*> maps(e.degree(), &m);
  return apply_on_legs(maps, e);
}

}  // namespace

// ---------------------------------------------------------------------------
// braided Hopf algebras

ValidationReport validate_braided_hopf(const QuasiHopfAlgebra& h, const BraidedHopfAlgebra& b) {
  ValidationReport r = validate_yd(h, b.module);
  const FieldSpec f = h.field;
  const std::uint32_t d = b.dim();
  const YDModule& M = b.module;
  const YDModule one = trivial_yd(h);
  const YDModule MM = yd_tensor(h, M, M);
  const LinearMap id = id_map(f, d);
  const LinearMap m = flatten(b.mult);
  const LinearMap dl = flatten(b.comult);
  const LinearMap eps = LinearMap(f, {d}, {1}, [&] {
    std::vector<TensorElement> cols;
    for (std::uint32_t k = 0; k < d; ++k) cols.push_back(b.counit.column(k).reshaped({1}));
    return cols;
  }());
  const LinearMap u = point(b.unit);

  r.record("braided_mult_morphism", is_yd_morphism(h, MM, M, m));
  r.record("braided_unit_morphism", is_yd_morphism(h, one, M, u));
  r.record("braided_comult_morphism", is_yd_morphism(h, M, MM, dl));
  r.record("braided_counit_morphism", is_yd_morphism(h, M, one, eps));

  const HModule bm = M.module();
  compare_maps(r, "braided_associative", m.after(flatten(m.tensor(id))),
               m.after(flatten(id.tensor(m))).after(associator(h, bm, bm, bm)));
  compare_maps(r, "braided_unit", m.after(flatten(u.tensor(id))), id);
  compare_maps(r, "braided_unit", m.after(flatten(id.tensor(u))), id);
  compare_maps(r, "braided_coassociative", associator(h, bm, bm, bm).after(flatten(dl.tensor(id))).after(dl),
               flatten(id.tensor(dl)).after(dl));
  compare_maps(r, "braided_counit", flatten(eps.tensor(id)).after(dl), id);
  compare_maps(r, "braided_counit", flatten(id.tensor(eps)).after(dl), id);

  {
    // product on B⊗B: (m⊗m) a⁻¹_{B,B,B⊗B} (id⊗a_{B,B,B}) (id⊗c⊗id) (id⊗a⁻¹_{B,B,B}) a_{B,B,B⊗B}
    const HModule bb = MM.module();
    const LinearMap c = braiding(h, M, M);
    const LinearMap mbb = flatten(m.tensor(m))
                              .after(associator_inverse(h, bm, bm, bb))
                              .after(flatten(id.tensor(associator(h, bm, bm, bm))))
                              .after(flatten(id.tensor(flatten(c.tensor(id)))))
                              .after(flatten(id.tensor(associator_inverse(h, bm, bm, bm))))
                              .after(associator(h, bm, bm, bb));
    compare_maps(r, "braided_bialgebra", dl.after(m), mbb.after(flatten(dl.tensor(dl))));
    compare_maps(r, "braided_bialgebra", dl.after(u), flatten(u.tensor(u)));
    compare_maps(r, "braided_bialgebra", eps.after(m), flatten(eps.tensor(eps)));
    compare_maps(r, "braided_bialgebra", eps.after(u), id_map(f, 1));
  }
  {
    const LinearMap& s = b.antipode;
    const LinearMap ue = u.after(eps);
    compare_maps(r, "braided_antipode", m.after(flatten(s.tensor(id))).after(dl), ue);
    compare_maps(r, "braided_antipode", m.after(flatten(id.tensor(s))).after(dl), ue);
    r.record("braided_antipode_bijective", b.antipode_inv.has_value() || invert_map(s).has_value());
  }
  return r;
}

// ---------------------------------------------------------------------------
// projections

QuasiHopfProjection make_projection(const QuasiHopfAlgebra& h, const QuasiHopfAlgebra& a, LinearMap i, LinearMap pi) {
  if (i.source() != Shape{h.dim} || i.target() != Shape{a.dim} || pi.source() != Shape{a.dim} ||
      pi.target() != Shape{h.dim}) {
    throw DimensionMismatch("projection maps do not match H and A");
  }
  return {h, derive_all(h), a, std::move(i), std::move(pi)};
}

ValidationReport verify_quasi_hopf_map(const QuasiHopfAlgebra& src, const QuasiHopfAlgebra& tgt, const LinearMap& f,
                                       const std::string& prefix) {
  ValidationReport r("pi");
  compare_maps(r, prefix + "_multiplicative", f.after(src.mult), tgt.mult.after(f.tensor(f)));
  r.expect_equal(prefix + "_unital", f.apply(src.unit), tgt.unit);
  compare_maps(r, prefix + "_comultiplicative", tgt.comult.after(f), f.tensor(f).after(src.comult));
  compare_maps(r, prefix + "_counit", tgt.counit.after(f), src.counit);
  r.expect_equal(prefix + "_reassociator", map_all(f, src.phi), tgt.phi);
  r.expect_equal(prefix + "_alpha", f.apply(src.alpha), tgt.alpha);
  r.expect_equal(prefix + "_beta", f.apply(src.beta), tgt.beta);
  compare_maps(r, prefix + "_antipode", tgt.antipode.after(f), f.after(src.antipode));
  return r;
}

LinearMap projection_pi(const DoubleAlgebra& d, const TensorElement& R) {
  const QuasiHopfAlgebra& h = d.base;
  const std::uint32_t n = h.dim;
  LegExpr e = E(d.derived.q_R, {"q1", "q2"}) * E(R, {"R1", "R2"});
  e.merge(h.mult, "w", {"q2", "R1"}).merge(h.mult, "v", {"q1", "R2"});
  e = e * E(h.tagged(), {"H", "h"});
  e.merge(h.mult, "v", {"v", "h"});
  return map_from_graph(e.take({"w", "H", "v"}), {n * n}, {n});
}

ValidationReport verify_projection(const QuasiHopfProjection& p, const TensorElement* R_D, const TensorElement* R) {
  ValidationReport r("pi");
  compare_maps(r, "pi_section", p.pi.after(p.i), id_map(p.H.field, p.H.dim));
  r.append(verify_quasi_hopf_map(p.A, p.H, p.pi, "pi"));
  r.append(verify_quasi_hopf_map(p.H, p.A, p.i, "inclusion"));
  if (R_D && R) r.expect_equal("pi_r_matrix", map_all(p.pi, *R_D), *R);
  return r;
}

LinearMap circ_product(const QuasiHopfProjection& p) {
  const QuasiHopfAlgebra& h = p.H;
  const QuasiHopfAlgebra& a = p.A;
  const FieldSpec f = h.field;
  const std::uint32_t N = a.dim;
  // i(X¹) a i(S(x¹X²)αx²X³₁) a' i(S(x³X³₂))
  LegExpr k = E(h.phi, {"X1", "X2", "X3"}) * E(h.phi_inv, {"x1", "x2", "x3"}) * E(h.alpha, {"al"});
  k.split(h.comult, "X3", "X31", "X32").merge(h.mult, "s", {"x1", "X2"}).map(h.antipode, "s");
  k.merge(h.mult, "k2", {"s", "al", "x2", "X31"}).merge(h.mult, "k3", {"x3", "X32"}).map(h.antipode, "k3");
  k.map(p.i, "X1").map(p.i, "k2").map(p.i, "k3");
  LegExpr e = k * tag(f, N, "A", "a") * tag(f, N, "B", "b");
  e.merge(a.mult, "r", {"X1", "a", "k2", "b", "k3"});
  return map_from_graph(e.take({"A", "B", "r"}), {N, N}, {N});
}

LinearMap adjoint_action(const QuasiHopfProjection& p) {
  const QuasiHopfAlgebra& h = p.H;
  const std::uint32_t n = h.dim, N = p.A.dim;
  LegExpr e = E(h.tagged(), {"H", "h"});
  e.split(h.comult, "h", "h1", "h2").map(h.antipode, "h2").map(p.i, "h1").map(p.i, "h2");
  e = e * tag(h.field, N, "A", "a");
  e.merge(p.A.mult, "r", {"h1", "a", "h2"});
  return map_from_graph(e.take({"H", "A", "r"}), {n, N}, {N});
}

LinearMap big_pi(const QuasiHopfProjection& p) {
  const QuasiHopfAlgebra& h = p.H;
  const std::uint32_t N = p.A.dim;
  LegExpr e = tag(h.field, N, "A", "a");
  e.split(p.A.comult, "a", "a1", "a2").map(p.pi, "a2").map(h.antipode, "a2");
  e = e * E(h.beta, {"be"});
  e.merge(h.mult, "t", {"be", "a2"}).map(p.i, "t").merge(p.A.mult, "r", {"a1", "t"});
  return map_from_graph(e.take({"A", "r"}), {N}, {N});
}

std::pair<LinearMap, LinearMap> membership_sides(const QuasiHopfProjection& p) {
  const QuasiHopfAlgebra& h = p.H;
  const std::uint32_t n = h.dim, N = p.A.dim;
  LegExpr l = tag(h.field, N, "A", "a");
  l.split(p.A.comult, "a", "a1", "a2").map(p.pi, "a2");
  // i(x¹)a i(S(x³₂X³)f¹) ⊗ x²X¹βS(x³₁X²)f²
  LegExpr e = E(h.phi_inv, {"x1", "x2", "x3"}) * E(h.phi, {"X1", "X2", "X3"}) * E(p.derived.f, {"f1", "f2"});
  e.split(h.comult, "x3", "x31", "x32").merge(h.mult, "u", {"x32", "X3"}).map(h.antipode, "u");
  e.merge(h.mult, "u", {"u", "f1"}).map(p.i, "u").map(p.i, "x1");
  e.merge(h.mult, "v", {"x31", "X2"}).map(h.antipode, "v");
  e = e * E(h.beta, {"be"});
  e.merge(h.mult, "w", {"x2", "X1", "be", "v", "f2"});
  e = e * tag(h.field, N, "A", "a");
  e.merge(p.A.mult, "l", {"x1", "a", "u"});
  return {map_from_graph(l.take({"A", "a1", "a2"}), {N}, {N, n}),
          map_from_graph(e.take({"A", "l", "w"}), {N}, {N, n})};
}

LinearMap projection_coaction(const QuasiHopfProjection& p) {
  const QuasiHopfAlgebra& h = p.H;
  const LinearMap& m = h.mult;
  const std::uint32_t n = h.dim, N = p.A.dim;
  // X¹Y¹₁π(b₁)g¹S(q²Y²₂)Y³ ⊗ i(X²Y¹₂)b₂i(g²S(X³q¹Y²₁))
  LegExpr e = E(h.phi, {"X1", "X2", "X3"}) * E(h.phi, {"Y1", "Y2", "Y3"});
  e.split(h.comult, "Y1", "Y11", "Y12").split(h.comult, "Y2", "Y21", "Y22").merge(m, "l2", {"X2", "Y12"});
  e = e * E(p.derived.q_R, {"q1", "q2"});
  e.merge(m, "s1", {"q2", "Y22"}).map(h.antipode, "s1").merge(m, "s2", {"X3", "q1", "Y21"}).map(h.antipode, "s2");
  e = e * E(p.derived.f_inv, {"g1", "g2"});
  e.merge(m, "s2", {"g2", "s2"}).map(p.i, "s2").map(p.i, "l2");
  e = e * tag(h.field, N, "T", "b");
  e.split(p.A.comult, "b", "b1", "b2").map(p.pi, "b1");
  e.merge(m, "L", {"X1", "Y11", "b1", "g1", "s1", "Y3"}).merge(p.A.mult, "r", {"l2", "b2", "s2"});
  return map_from_graph(e.take({"T", "L", "r"}), {N}, {n, N});
}

LinearMap projection_antipode(const QuasiHopfProjection& p) {
  const QuasiHopfAlgebra& h = p.H;
  const std::uint32_t N = p.A.dim;
  LegExpr e = tag(h.field, N, "A", "a");
  e.split(p.A.comult, "a", "a1", "a2").map(p.pi, "a1");
  e = e * E(h.beta, {"be"});
  e.merge(h.mult, "t", {"a1", "be"}).map(p.i, "t").map(p.A.antipode, "a2").merge(p.A.mult, "r", {"t", "a2"});
  return map_from_graph(e.take({"A", "r"}), {N}, {N});
}

LinearMap chi_general(const QuasiHopfProjection& p) {
  const QuasiHopfAlgebra& h = p.H;
  const std::uint32_t n = h.dim, N = p.A.dim;
  LegExpr e = E(h.phi, {"X1", "X2", "X3"}) * E(h.alpha, {"al"}) * tag(h.field, n, "H", "h");
  e.map(h.antipode, "X2").merge(h.mult, "t", {"X2", "al", "X3", "h"}).map(p.i, "t").map(p.i, "X1");
  e = e * tag(h.field, N, "A", "b");
  e.merge(p.A.mult, "r", {"X1", "b", "t"});
  return map_from_graph(e.take({"A", "H", "r"}), {N, n}, {N});
}

// ---------------------------------------------------------------------------
// extraction of B^i

Extraction bi_extract(const DoubleAlgebra& d, const TensorElement& R) {
  const QuasiHopfAlgebra& h = d.base;
  const QuasiHopfAlgebra& A = d.inner;
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim, N = A.dim;
  Extraction x;
  x.projection = make_projection(h, A, d.inclusion, projection_pi(d, R));
  const QuasiHopfProjection& p = x.projection;
  ValidationReport& r = x.report;
  x.circ = circ_product(p);
  x.adjoint = adjoint_action(p);
  x.Pi = big_pi(p);
  x.rank = static_cast<std::uint32_t>(map_rank(x.Pi));
  if (x.rank != n) {
    throw RankMismatch("dim im(Π) = " + std::to_string(x.rank) + ", expected " + std::to_string(n));
  }
  r.pass("b_rank", std::to_string(x.rank));
  const LinearMap& Pi = x.Pi;
  const LinearMap& circ = x.circ;
  const LinearMap& adj = x.adjoint;

  std::vector<Scalar> eps(n);
  for (std::uint32_t j = 0; j < n; ++j) eps[j] = h.eps(h.basis(j));
  x.mu = LinearMap::from_function(f, {N}, {n}, [&](Key k) {
    return (eps[k % n] * TensorElement::basis(f, {n}, {static_cast<std::uint32_t>(k / n)}));
  });
  x.mu_inv = LinearMap::from_function(f, {n}, {N}, [&](Key k) {
    return Pi.apply(double_element(d, h.basis(static_cast<std::uint32_t>(k)), h.unit));
  });
  const LinearMap& mu = x.mu;
  const LinearMap& mu_inv = x.mu_inv;

  compare_maps(r, "pi_idempotent", Pi.after(Pi), Pi);
  compare_maps(r, "mu_inverse", mu.after(mu_inv), id_map(f, n));
  compare_maps(r, "mu_bijective", mu_inv.after(mu).after(Pi), Pi);
  {
    const auto [lhs, rhs] = membership_sides(p);
    compare_maps(r, "b_membership", lhs.after(mu_inv), rhs.after(mu_inv));
  }
  {
    // Π(a i(h)) = ε(h)Π(a) and Π(i(h)a) = h▷Π(a)
    LegExpr a = tag(f, N, "A", "a") * E(h.tagged(), {"H", "h"});
    LegExpr b = a;
    LegExpr c = a;
    LegExpr e = a;
    a.map(p.i, "h").merge(A.mult, "a", {"a", "h"}).map(Pi, "a");
    b.contract(h.counit, "h").map(Pi, "a");
    r.expect_equal("pi_right_h", a.take({"A", "H", "a"}), b.take({"A", "H", "a"}));
    c.map(p.i, "h").merge(A.mult, "a", {"h", "a"}).map(Pi, "a");
    e.map(Pi, "a").apply(adj, {"h", "a"}, {"a"});
    r.expect_equal("pi_left_h", c.take({"A", "H", "a"}), e.take({"A", "H", "a"}));
  }
  const TensorElement ib = p.i.apply(h.beta);
  {
    // i(β) is the unit of ∘; ▷ is an action and ∘ is H-linear
    const LinearMap ub = point(ib);
    const LinearMap idA = id_map(f, N);
    compare_maps(r, "circ_unit", flatten(circ).after(flatten(ub.tensor(idA))), idA);
    compare_maps(r, "circ_unit", flatten(circ).after(flatten(idA.tensor(ub))), idA);
    LegExpr a1 = E(h.tagged(), {"H", "h"}) * E(h.tagged(), {"G", "g"}) * tag(f, N, "A", "a");
    LegExpr a2 = a1;
    a1.merge(h.mult, "hg", {"h", "g"}).apply(adj, {"hg", "a"}, {"a"});
    a2.apply(adj, {"g", "a"}, {"a"}).apply(adj, {"h", "a"}, {"a"});
    r.expect_equal("adjoint_module", a1.take({"H", "G", "A", "a"}), a2.take({"H", "G", "A", "a"}));
    LegExpr u = E(h.unit, {"u"}) * tag(f, N, "A", "a");
    u.apply(adj, {"u", "a"}, {"a"});
    r.expect_equal("adjoint_module", u.take({"A", "a"}), diagonal(f, N));
    LegExpr m1 = E(h.tagged(), {"H", "h"}) * tag(f, N, "A", "a") * tag(f, N, "B", "b");
    LegExpr m2 = m1;
    m1.apply(circ, {"a", "b"}, {"a"}).apply(adj, {"h", "a"}, {"a"});
    m2.split(h.comult, "h", "h1", "h2").apply(adj, {"h1", "a"}, {"a"}).apply(adj, {"h2", "b"}, {"b"});
    m2.apply(circ, {"a", "b"}, {"a"});
    r.expect_equal("circ_module_algebra", m1.take({"H", "A", "B", "a"}), m2.take({"H", "A", "B", "a"}));
    LegExpr ua = E(h.tagged(), {"H", "h"}) * E(ib, {"a"});
    LegExpr ue = ua;
    ua.apply(adj, {"h", "a"}, {"a"});
    ue.contract(h.counit, "h");
    r.expect_equal("circ_module_algebra", ua.take({"H", "a"}), ue.take({"H", "a"}));
    // (a∘a')∘a'' = (X¹▷a)∘((X²▷a')∘(X³▷a''))
    LegExpr t1 = tag(f, N, "A", "a") * tag(f, N, "B", "b") * tag(f, N, "C", "c");
    LegExpr t2 = t1 * E(h.phi, {"X1", "X2", "X3"});
    t1.apply(circ, {"a", "b"}, {"a"}).apply(circ, {"a", "c"}, {"a"});
    t2.apply(adj, {"X1", "a"}, {"a"}).apply(adj, {"X2", "b"}, {"b"}).apply(adj, {"X3", "c"}, {"c"});
    t2.apply(circ, {"b", "c"}, {"b"}).apply(circ, {"a", "b"}, {"a"});
    r.expect_equal("circ_associative", t1.take({"A", "B", "C", "a"}), t2.take({"A", "B", "C", "a"}));
  }
  {
    // Π(Π(a)∘a') = Π(a)∘Π(a')
    LegExpr a = tag(f, N, "A", "a") * tag(f, N, "B", "b");
    LegExpr b = a;
    a.map(Pi, "a").apply(circ, {"a", "b"}, {"a"}).map(Pi, "a");
    b.map(Pi, "a").map(Pi, "b").apply(circ, {"a", "b"}, {"a"});
    r.expect_equal("circ_projection", a.take({"A", "B", "a"}), b.take({"A", "B", "a"}));
  }

  // structures of B^i on the basis μ⁻¹(e^k), read back through μ
  auto in_b = [&](const TensorElement& v) { return Pi.apply(v) == v; };
  const LinearMap lbi = projection_coaction(p);
  const LinearMap sb = projection_antipode(p);
  BraidedHopfAlgebra& B = x.B;
  B.module.dim = n;
  bool closed_action = true, closed_coaction = true, closed_mult = true, closed_antipode = true;
  B.module.action = LinearMap::from_function(f, {n, n}, {n}, [&](Key k) {
    const TensorElement v = adj.apply(outer(h.basis(static_cast<std::uint32_t>(k / n)), mu_inv.column(k % n)));
    closed_action = closed_action && in_b(v);
    return mu.apply(v);
  });
  B.module.coaction = LinearMap::from_function(f, {n}, {n, n}, [&](Key k) {
    const TensorElement v = lbi.apply(mu_inv.column(k));
    closed_coaction = closed_coaction && apply_on_leg(Pi, v, 1) == v;
    return apply_on_leg(mu, v, 1);
  });
  B.mult = LinearMap::from_function(f, {n, n}, {n}, [&](Key k) {
    const TensorElement v = circ.apply(outer(mu_inv.column(k / n), mu_inv.column(k % n)));
    closed_mult = closed_mult && in_b(v);
    return mu.apply(v);
  });
  r.record("b_closed_unit", in_b(ib));
  B.unit = mu.apply(ib);
  B.comult = LinearMap::from_function(f, {n}, {n, n}, [&](Key k) {
    return apply_on_legs({&mu, &mu}, apply_on_legs({&Pi, &Pi}, A.comult.apply(mu_inv.column(k))));
  });
  B.counit = A.counit.after(mu_inv);
  B.antipode = LinearMap::from_function(f, {n}, {n}, [&](Key k) {
    const TensorElement v = sb.apply(mu_inv.column(k));
    closed_antipode = closed_antipode && in_b(v);
    return mu.apply(v);
  });
  B.antipode_inv = invert_map(B.antipode);
  r.record("b_closed_action", closed_action);
  r.record("b_closed_coaction", closed_coaction);
  r.record("b_closed_mult", closed_mult);
  r.record("b_closed_antipode", closed_antipode);
  r.append(validate_braided_hopf(h, B));
  return x;
}

// ---------------------------------------------------------------------------
// closed forms on H*

BraidedHopfAlgebra braided_dual(const DoubleAlgebra& d, const TensorElement& R) {
  const QuasiHopfAlgebra& h = d.base;
  const DualStructure& ds = d.dual;
  const DerivedElements& dv = d.derived;
  const FieldSpec f = h.field;
  const LinearMap& m = h.mult;
  const LinearMap& si = h.s_inv();
  const std::uint32_t n = h.dim;
  BraidedHopfAlgebra B;
  B.module.dim = n;
  {
    // h·φ = h₁⇀φ↼S⁻¹(h₂)
    LegExpr e = E(h.tagged(), {"H", "h"}) * tag(f, n, "P", "p");
    e.split(h.comult, "h", "h1", "h2").map(si, "h2");
    e.apply(ds.left_hit, {"h1", "p"}, {"p"}).apply(ds.right_hit, {"p", "h2"}, {"p"});
    B.module.action = map_from_graph(e.take({"H", "P", "p"}), {n, n}, {n});
  }
  const LinearMap& act = B.module.action;
  {
    // λ(φ) = R² ⊗ R¹·φ
    LegExpr e = tag(f, n, "P", "p") * E(R, {"R1", "R2"});
    e.apply(act, {"R1", "p"}, {"p"});
    B.module.coaction = map_from_graph(e.take({"P", "R2", "p"}), {n}, {n, n});
  }
  {
    // (x¹X¹⇀φ↼S⁻¹(f²x³₂Y³R¹X²))(x²Y¹R²₁X³₁⇀ψ↼S⁻¹(f¹x³₁Y²R²₂X³₂))
    LegExpr e = E(h.phi_inv, {"x1", "x2", "x3"}) * E(h.phi, {"X1", "X2", "X3"});
    e.split(h.comult, "x3", "x31", "x32").split(h.comult, "X3", "X31", "X32").merge(m, "u1", {"x1", "X1"});
    e = e * E(h.phi, {"Y1", "Y2", "Y3"}) * E(R, {"R1", "R2"});
    e.split(h.comult, "R2", "R21", "R22").merge(m, "u2", {"x2", "Y1", "R21", "X31"});
    e = e * E(dv.f, {"f1", "f2"});
    e.merge(m, "v1", {"f2", "x32", "Y3", "R1", "X2"}).merge(m, "v2", {"f1", "x31", "Y2", "R22", "X32"});
    e.map(si, "v1").map(si, "v2");
    e = e * tag(f, n, "P", "p") * tag(f, n, "Q", "q");
    e.apply(ds.left_hit, {"u1", "p"}, {"p"}).apply(ds.right_hit, {"p", "v1"}, {"p"});
    e.apply(ds.left_hit, {"u2", "q"}, {"q"}).apply(ds.right_hit, {"q", "v2"}, {"q"});
    e.apply(ds.convolution, {"p", "q"}, {"p"});
    B.mult = map_from_graph(e.take({"P", "Q", "p"}), {n, n}, {n});
  }
  B.unit = ds.counit.with_dual_mask(0);
  {
    // X¹₁p¹⇀φ₂↼S⁻¹(X¹₂p²) ⊗ X²⇀φ₁↼S⁻¹(X³)
    LegExpr e = tag(f, n, "P", "p");
    e.apply(ds.comult, {"p"}, {"f1", "f2"});
    e = e * E(h.phi, {"X1", "X2", "X3"}) * E(dv.p_R, {"p1", "p2"});
    e.split(h.comult, "X1", "X11", "X12").merge(m, "u", {"X11", "p1"}).merge(m, "v", {"X12", "p2"});
    e.map(si, "v").map(si, "X3");
    e.apply(ds.left_hit, {"u", "f2"}, {"f2"}).apply(ds.right_hit, {"f2", "v"}, {"f2"});
    e.apply(ds.left_hit, {"X2", "f1"}, {"f1"}).apply(ds.right_hit, {"f1", "X3"}, {"f1"});
    B.comult = map_from_graph(e.take({"P", "f2", "f1"}), {n}, {n, n});
  }
  {
    const TensorElement sa = si.apply(h.alpha);
    B.counit = LinearMap::from_function(f, {n}, {}, [&](Key k) { return TensorElement::scalar(sa.coeff_key(k)); });
  }
  {
    // Q¹q¹R²x²·[p¹P²S(Q²)⇀S̄⁻¹(φ)↼S(q²R¹x¹P¹)x³S⁻¹(p²)]
    LegExpr e = E(dv.q_R, {"Q1", "Q2"}) * E(dv.p_R, {"p1", "p2"}) * E(dv.p_R, {"P1", "P2"});
    e.map(h.antipode, "Q2").merge(m, "u", {"p1", "P2", "Q2"});
    e = e * E(dv.q_R, {"q1", "q2"}) * E(R, {"R1", "R2"});
    e = e * E(h.phi_inv, {"x1", "x2", "x3"});
    e.merge(m, "v", {"q2", "R1", "x1", "P1"}).map(h.antipode, "v").map(si, "p2").merge(m, "v", {"v", "x3", "p2"});
    e.merge(m, "a", {"Q1", "q1", "R2", "x2"});
    e = e * tag(f, n, "P", "p");
    e.map(*ds.s_bar_inv, "p").apply(ds.left_hit, {"u", "p"}, {"p"}).apply(ds.right_hit, {"p", "v"}, {"p"});
    e.apply(act, {"a", "p"}, {"p"});
    B.antipode = map_from_graph(e.take({"P", "p"}), {n}, {n});
  }
  B.antipode_inv = invert_map(B.antipode);
  return B;
}

ValidationReport compare_braided(const BraidedHopfAlgebra& a, const BraidedHopfAlgebra& b) {
  ValidationReport r("transport");
  compare_maps(r, "transport_action", a.module.action, b.module.action);
  compare_maps(r, "transport_coaction", a.module.coaction, b.module.coaction);
  compare_maps(r, "transport_mult", a.mult, b.mult);
  r.expect_equal("transport_unit", a.unit, b.unit);
  compare_maps(r, "transport_comult", a.comult, b.comult);
  compare_maps(r, "transport_counit", a.counit, b.counit);
  compare_maps(r, "transport_antipode", a.antipode, b.antipode);
  return r;
}

LinearMap projection_closed_form(const DoubleAlgebra& d, const TensorElement& R) {
  const QuasiHopfAlgebra& h = d.base;
  const LinearMap& m = h.mult;
  const std::uint32_t n = h.dim;
  // y¹x¹⇀φ↼S⁻¹(y³R¹x²₁p¹) ⋈ y²R²x²₂p²S(x³)
  LegExpr e = E(h.phi_inv, {"y1", "y2", "y3"}) * E(h.phi_inv, {"x1", "x2", "x3"});
  e.split(h.comult, "x2", "x21", "x22").merge(m, "u", {"y1", "x1"}).map(h.antipode, "x3");
  e = e * E(R, {"R1", "R2"}) * E(d.derived.p_R, {"p1", "p2"});
  e.merge(m, "v", {"y3", "R1", "x21", "p1"}).map(h.s_inv(), "v").merge(m, "w", {"y2", "R2", "x22", "p2", "x3"});
  e = e * tag(h.field, n, "P", "p");
  e.apply(d.dual.left_hit, {"u", "p"}, {"p"}).apply(d.dual.right_hit, {"p", "v"}, {"p"});
  return map_from_graph(e.take({"P", "p", "w"}), {n}, {n * n});
}

LinearMap product_dual_part(const DoubleAlgebra& d) {
  const QuasiHopfAlgebra& h = d.base;
  const DualStructure& ds = d.dual;
  const LinearMap& m = h.mult;
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim;
  // ε(h') (X¹₁x¹⇀φ↼S⁻¹(f²X³))(X¹₂x²h₁⇀Ψ↼S⁻¹(f¹X²x³h₂))
  LegExpr e = E(h.phi, {"X1", "X2", "X3"}) * E(h.phi_inv, {"x1", "x2", "x3"}) * E(d.derived.f, {"f1", "f2"});
  e.split(h.comult, "X1", "X11", "X12").merge(m, "u1", {"X11", "x1"}).merge(m, "v1", {"f2", "X3"});
  e.map(h.s_inv(), "v1");
  e = e * tag(f, n, "B", "h");
  e.split(h.comult, "h", "h1", "h2").merge(m, "u2", {"X12", "x2", "h1"}).merge(m, "v2", {"f1", "X2", "x3", "h2"});
  e.map(h.s_inv(), "v2");
  e = e * tag(f, n, "P", "p") * tag(f, n, "Q", "q") * tag(f, n, "C", "c");
  e.contract(h.counit, "c");
  e.apply(ds.left_hit, {"u1", "p"}, {"p"}).apply(ds.right_hit, {"p", "v1"}, {"p"});
  e.apply(ds.left_hit, {"u2", "q"}, {"q"}).apply(ds.right_hit, {"q", "v2"}, {"q"});
  e.apply(ds.convolution, {"p", "q"}, {"p"});
  return map_from_graph(e.take({"P", "B", "Q", "C", "p"}), {n * n, n * n}, {n});
}

// ---------------------------------------------------------------------------
// biproduct

QuasiHopfAlgebra build_biproduct_unchecked(const QuasiHopfAlgebra& h, const BraidedHopfAlgebra& b) {
  const FieldSpec f = h.field;
  const LinearMap& m = h.mult;
  const std::uint32_t n = h.dim, d = b.dim(), N = d * n;
  const LinearMap& act = b.module.action;
  const LinearMap& co = b.module.coaction;
  // (x¹·b)(x²h₁·b') × x³h₂h'
  LinearMap mult;
  {
    LegExpr e = tag(f, d, "A", "b") * tag(f, n, "P", "h") * tag(f, d, "C", "c") * tag(f, n, "Q", "k");
    e = e * E(h.phi_inv, {"x1", "x2", "x3"});
    e.apply(act, {"x1", "b"}, {"b"}).split(h.comult, "h", "h1", "h2").merge(m, "y", {"x2", "h1"});
    e.apply(act, {"y", "c"}, {"c"}).apply(b.mult, {"b", "c"}, {"b"}).merge(m, "k", {"x3", "h2", "k"});
    mult = map_from_graph(e.take({"A", "P", "C", "Q", "b", "k"}), {N, N}, {N});
  }
  // y¹X¹·b₁ × y²Y¹(x¹X²·b₂)₋₁x²X³₁h₁ ⊗ y³₁Y²·(x¹X²·b₂)₀ × y³₂Y³x³X³₂h₂
  LinearMap comult;
  {
    LegExpr e = tag(f, d, "A", "b") * tag(f, n, "P", "h");
    e.apply(b.comult, {"b"}, {"b1", "b2"});
    e = e * E(h.phi, {"X1", "X2", "X3"});
    e.apply(act, {"X1", "b1"}, {"b1"}).split(h.comult, "X3", "X31", "X32");
    e = e * E(h.phi_inv, {"x1", "x2", "x3"});
    e.merge(m, "z", {"x1", "X2"}).apply(act, {"z", "b2"}, {"b2"}).apply(co, {"b2"}, {"c", "b2"});
    e = e * E(h.phi_inv, {"y1", "y2", "y3"});
    e.apply(act, {"y1", "b1"}, {"b1"}).split(h.comult, "y3", "y31", "y32");
    e = e * E(h.phi, {"Y1", "Y2", "Y3"});
    e.split(h.comult, "h", "h1", "h2");
    e.merge(m, "L", {"y2", "Y1", "c", "x2", "X31", "h1"}).merge(m, "w", {"y31", "Y2"});
    e.apply(act, {"w", "b2"}, {"b2"}).merge(m, "Rr", {"y32", "Y3", "x3", "X32", "h2"});
    comult = map_from_graph(e.take({"A", "P", "b1", "L", "b2", "Rr"}), {N}, {N, N});
  }
  LinearMap counit = LinearMap::from_function(f, {N}, {}, [&](Key k) {
    return TensorElement::scalar(b.counit.column(k / n).scalar_value() *
                                 h.eps(h.basis(static_cast<std::uint32_t>(k % n))));
  });
  auto embed = [&](const TensorElement& t) {
    // 1×t¹ ⊗ ... ⊗ 1×t^k
    Names tn, order;
    LegExpr e = LegExpr::scalar(f.one());
    for (std::size_t j = 0; j < t.degree(); ++j) {
      tn.push_back("t" + std::to_string(j));
      e = e * E(b.unit, {"u" + std::to_string(j)});
    }
    e = e * E(t, tn);
    for (std::size_t j = 0; j < t.degree(); ++j) {
      e.fuse("o" + std::to_string(j), {"u" + std::to_string(j), tn[j]});
      order.push_back("o" + std::to_string(j));
    }
    return e.take(order);
  };
  // (1×S(X¹x¹₁b₋₁h)α)(X²x¹₂·S_B(b₀) × X³x²βS(x³))
  LinearMap antipode;
  {
    LegExpr e = tag(f, d, "A", "b") * tag(f, n, "P", "h");
    e.apply(co, {"b"}, {"c", "b"}).map(b.antipode, "b");
    e = e * E(h.phi, {"X1", "X2", "X3"}) * E(h.phi_inv, {"x1", "x2", "x3"});
    e.split(h.comult, "x1", "x11", "x12").merge(m, "s", {"X1", "x11", "c", "h"}).map(h.antipode, "s");
    e = e * E(h.alpha, {"al"}) * E(h.beta, {"be"});
    e.merge(m, "s", {"s", "al"}).merge(m, "w", {"X2", "x12"}).apply(act, {"w", "b"}, {"b"});
    e.map(h.antipode, "x3").merge(m, "t", {"X3", "x2", "be", "x3"});
    e = e * E(b.unit, {"u"});
    e.fuse("l", {"u", "s"}).fuse("r", {"b", "t"}).apply(mult, {"l", "r"}, {"o"});
    antipode = map_from_graph(e.take({"A", "P", "o"}), {N}, {N});
  }
  std::vector<std::string> labels;
  for (std::uint32_t k = 0; k < d; ++k) {
    for (const auto& l : h.labels) labels.push_back("b" + std::to_string(k) + "x" + l);
  }
  return make_quasi_hopf(f, std::move(labels), std::move(mult), embed(h.unit), std::move(comult), std::move(counit),
                         embed(h.phi), embed(h.phi_inv), std::move(antipode), embed(h.alpha), embed(h.beta));
}

QuasiHopfAlgebra build_biproduct(const QuasiHopfAlgebra& h, const BraidedHopfAlgebra& b) {
  QuasiHopfAlgebra out = build_biproduct_unchecked(h, b);
  require_valid(validate_all(out));
  return out;
}

// ---------------------------------------------------------------------------
// χ

LinearMap chi_iso(const DoubleAlgebra& d, const TensorElement& R) {
  const QuasiHopfAlgebra& h = d.base;
  const LinearMap& m = h.mult;
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim, N = n * n;
  // x¹X¹⇀φ↼S⁻¹(x³R¹X²) ⋈ x²R²X³h
  LegExpr e = E(h.phi_inv, {"x1", "x2", "x3"}) * E(h.phi, {"X1", "X2", "X3"}) * E(R, {"R1", "R2"});
  e.merge(m, "v", {"x3", "R1", "X2"}).map(h.s_inv(), "v").merge(m, "u", {"x1", "X1"});
  e.merge(m, "w", {"x2", "R2", "X3"});
  e = e * tag(f, n, "P", "p") * tag(f, n, "H", "h");
  e.merge(m, "w", {"w", "h"}).apply(d.dual.left_hit, {"u", "p"}, {"p"}).apply(d.dual.right_hit, {"p", "v"}, {"p"});
  return map_from_graph(e.take({"P", "H", "p", "w"}), {N}, {N});
}

ValidationReport verify_chi(const QuasiHopfAlgebra& biproduct, const DoubleAlgebra& d, const LinearMap& chi) {
  ValidationReport r("chi");
  r.record("chi_bijective", invert_map(chi).has_value());
  r.append(verify_quasi_hopf_map(biproduct, d.inner, chi, "chi"));
  r.set_stage("chi");
  return r;
}

QTCertificate r_from_projection(const DoubleAlgebra& d, const LinearMap& pi) {
  const TensorElement R = map_all(pi, d.R.R);
  return validate_r_matrix(d.base, R);
}

}  // namespace qhopf
