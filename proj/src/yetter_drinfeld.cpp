#include "qhopf/yetter_drinfeld.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

namespace {

using Names = std::vector<std::string>;

LegExpr E(const TensorElement& t, Names names) { return LegExpr(t.with_dual_mask(0), std::move(names)); }

LegExpr tag(FieldSpec f, std::uint32_t d, const std::string& t, const std::string& leg) {
  return LegExpr(diagonal(f, d), {t, leg});
}

/// Action of an element of H^⊗3 on U⊗V⊗W.
LinearMap act3(const QuasiHopfAlgebra& h, const TensorElement& t, const HModule& u, const HModule& v,
               const HModule& w) {
  const FieldSpec f = h.field;
  LegExpr e = tag(f, u.dim, "A", "u") * tag(f, v.dim, "B", "v") * tag(f, w.dim, "C", "w") * E(t, {"1", "2", "3"});
  e.apply(u.action, {"1", "u"}, {"u"}).apply(v.action, {"2", "v"}, {"v"}).apply(w.action, {"3", "w"}, {"w"});
  const std::uint32_t d = u.dim * v.dim * w.dim;
  return map_from_graph(e.take({"A", "B", "C", "u", "v", "w"}), {d}, {d});
}

LinearMap id_map(FieldSpec f, std::uint32_t d) { return LinearMap::identity(f, {d}); }

}  // namespace

YDModule trivial_yd(const QuasiHopfAlgebra& h) {
  const FieldSpec f = h.field;
  YDModule m;
  m.dim = 1;
  m.action = LinearMap::from_function(f, {h.dim, 1}, {1}, [&](Key k) {
    return TensorElement::from_entries(f, {1}, {{0, h.eps(h.basis(static_cast<std::uint32_t>(k)))}});
  });
  m.coaction = LinearMap(f, {1}, {h.dim, 1}, {h.unit.reshaped({h.dim, 1})});
  return m;
}

HModule regular_module(const QuasiHopfAlgebra& h) { return {h.dim, h.mult}; }

ValidationReport validate_module(const QuasiHopfAlgebra& h, const HModule& m) {
  ValidationReport r("yd");
  const FieldSpec f = h.field;
  const LinearMap& a = m.action;
  LegExpr one = E(h.unit, {"u"}) * tag(f, m.dim, "T", "m");
  one.apply(a, {"u", "m"}, {"m"});
  r.expect_equal("module_unital", one.take({"T", "m"}), diagonal(f, m.dim));
  LegExpr x = E(h.tagged(), {"A", "a"}) * E(h.tagged(), {"B", "b"}) * tag(f, m.dim, "T", "m");
  LegExpr y = x;
  x.merge(h.mult, "ab", {"a", "b"}).apply(a, {"ab", "m"}, {"m"});
  y.apply(a, {"b", "m"}, {"m"}).apply(a, {"a", "m"}, {"m"});
  r.expect_equal("module_associative", x.take({"A", "B", "T", "m"}), y.take({"A", "B", "T", "m"}));
  return r;
}

ValidationReport validate_yd(const QuasiHopfAlgebra& h, const YDModule& M) {
  ValidationReport r = validate_module(h, M.module());
  const FieldSpec f = h.field;
  const LinearMap& m = h.mult;
  const LinearMap& act = M.action;
  const LinearMap& co = M.coaction;
  {
    // X¹m₋₁ ⊗ (X²·m₀)₋₁X³ ⊗ (X²·m₀)₀ = X¹(Y¹·m)₋₁₁Y² ⊗ X²(Y¹·m)₋₁₂Y³ ⊗ X³·(Y¹·m)₀
    LegExpr l = tag(f, M.dim, "T", "m");
    l.apply(co, {"m"}, {"c1", "m"});
    l = l * E(h.phi, {"X1", "X2", "X3"});
    l.merge(m, "a1", {"X1", "c1"}).apply(act, {"X2", "m"}, {"m"}).apply(co, {"m"}, {"c2", "m"});
    l.merge(m, "a2", {"c2", "X3"});
    LegExpr rr = tag(f, M.dim, "T", "m") * E(h.phi, {"Y1", "Y2", "Y3"});
    rr.apply(act, {"Y1", "m"}, {"m"}).apply(co, {"m"}, {"c", "m"}).split(h.comult, "c", "c1", "c2");
    rr = rr * E(h.phi, {"X1", "X2", "X3"});
    rr.merge(m, "a1", {"X1", "c1", "Y2"}).merge(m, "a2", {"X2", "c2", "Y3"}).apply(act, {"X3", "m"}, {"m"});
    r.expect_equal("yd_coassociative", l.take({"T", "a1", "a2", "m"}), rr.take({"T", "a1", "a2", "m"}));
  }
  {
    LegExpr l = tag(f, M.dim, "T", "m");
    l.apply(co, {"m"}, {"c", "m"}).contract(h.counit, "c");
    r.expect_equal("yd_counit", l.take({"T", "m"}), diagonal(f, M.dim));
  }
  {
    // h₁m₋₁ ⊗ h₂·m₀ = (h₁·m)₋₁h₂ ⊗ (h₁·m)₀
    LegExpr l = E(h.tagged(), {"H", "h"}) * tag(f, M.dim, "T", "m");
    LegExpr rr = l;
    l.split(h.comult, "h", "h1", "h2").apply(co, {"m"}, {"c", "m"}).merge(m, "c", {"h1", "c"});
    l.apply(act, {"h2", "m"}, {"m"});
    rr.split(h.comult, "h", "h1", "h2").apply(act, {"h1", "m"}, {"m"}).apply(co, {"m"}, {"c", "m"});
    rr.merge(m, "c", {"c", "h2"});
    r.expect_equal("yd_compatible", l.take({"H", "T", "c", "m"}), rr.take({"H", "T", "c", "m"}));
  }
  return r;
}

HModule module_tensor(const QuasiHopfAlgebra& h, const HModule& a, const HModule& b) {
  const FieldSpec f = h.field;
  LegExpr e = E(h.tagged(), {"H", "h"}) * tag(f, a.dim, "A", "u") * tag(f, b.dim, "B", "v");
  e.split(h.comult, "h", "h1", "h2").apply(a.action, {"h1", "u"}, {"u"}).apply(b.action, {"h2", "v"}, {"v"});
  const std::uint32_t d = a.dim * b.dim;
  return {d, map_from_graph(e.take({"H", "A", "B", "u", "v"}), {h.dim, d}, {d})};
}

YDModule yd_tensor(const QuasiHopfAlgebra& h, const YDModule& M, const YDModule& N) {
  const FieldSpec f = h.field;
  const LinearMap& m = h.mult;
  HModule t = module_tensor(h, M.module(), N.module());
  // X¹(x¹Y¹·m)₋₁x²(Y²·n)₋₁Y³ ⊗ X²·(x¹Y¹·m)₀ ⊗ X³x³·(Y²·n)₀
  LegExpr e = tag(f, M.dim, "A", "u") * tag(f, N.dim, "B", "v") * E(h.phi, {"Y1", "Y2", "Y3"});
  e.apply(M.action, {"Y1", "u"}, {"u"}).apply(N.action, {"Y2", "v"}, {"v"});
  e = e * E(h.phi_inv, {"x1", "x2", "x3"});
  e.apply(M.action, {"x1", "u"}, {"u"}).apply(M.coaction, {"u"}, {"cu", "u"}).apply(N.coaction, {"v"}, {"cv", "v"});
  e = e * E(h.phi, {"X1", "X2", "X3"});
  e.merge(m, "c", {"X1", "cu", "x2", "cv", "Y3"}).apply(M.action, {"X2", "u"}, {"u"});
  e.merge(m, "z", {"X3", "x3"}).apply(N.action, {"z", "v"}, {"v"});
  const TensorElement g = e.take({"A", "B", "c", "u", "v"});
  YDModule out;
  out.dim = t.dim;
  out.action = std::move(t.action);
  out.coaction = map_from_graph(g, {t.dim}, {h.dim, t.dim});
  return out;
}

LinearMap braiding(const QuasiHopfAlgebra& h, const YDModule& M, const YDModule& N) {
  const FieldSpec f = h.field;
  LegExpr e = tag(f, M.dim, "A", "u") * tag(f, N.dim, "B", "v");
  e.apply(M.coaction, {"u"}, {"c", "u"}).apply(N.action, {"c", "v"}, {"v"});
  const std::uint32_t d = M.dim * N.dim;
  return map_from_graph(e.take({"A", "B", "v", "u"}), {d}, {d});
}

LinearMap braiding_inverse(const QuasiHopfAlgebra& h, const YDModule& M, const YDModule& N) {
  const FieldSpec f = h.field;
  const LinearMap& m = h.mult;
  // y³₁X²·(x¹·m)₀ ⊗ S⁻¹(S(y¹)αy²X¹(x¹·m)₋₁x²βS(y³₂X³x³))·n
  LegExpr e = tag(f, N.dim, "B", "v") * tag(f, M.dim, "A", "u") * E(h.phi_inv, {"x1", "x2", "x3"});
  e.apply(M.action, {"x1", "u"}, {"u"}).apply(M.coaction, {"u"}, {"cu", "u"});
  e = e * E(h.phi, {"X1", "X2", "X3"}) * E(h.phi_inv, {"y1", "y2", "y3"});
  e.split(h.comult, "y3", "y31", "y32").merge(m, "w", {"y31", "X2"}).apply(M.action, {"w", "u"}, {"u"});
  e.merge(m, "s", {"y32", "X3", "x3"}).map(h.antipode, "s").map(h.antipode, "y1");
  e = e * E(h.alpha, {"al"}) * E(h.beta, {"be"});
  e.merge(m, "z", {"y1", "al", "y2", "X1", "cu", "x2", "be", "s"}).map(h.s_inv(), "z");
  e.apply(N.action, {"z", "v"}, {"v"});
  const std::uint32_t d = M.dim * N.dim;
  return map_from_graph(e.take({"B", "A", "u", "v"}), {d}, {d});
}

LinearMap associator(const QuasiHopfAlgebra& h, const HModule& u, const HModule& v, const HModule& w) {
  return act3(h, h.phi, u, v, w);
}

LinearMap associator_inverse(const QuasiHopfAlgebra& h, const HModule& u, const HModule& v, const HModule& w) {
  return act3(h, h.phi_inv, u, v, w);
}

YDModule module_from_qt(const QuasiHopfAlgebra& h, const TensorElement& R, const HModule& M) {
  const FieldSpec f = h.field;
  LegExpr e = tag(f, M.dim, "A", "u") * E(R, {"r1", "r2"});
  e.apply(M.action, {"r1", "u"}, {"u"});
  YDModule out;
  out.dim = M.dim;
  out.action = M.action;
  out.coaction = map_from_graph(e.take({"A", "r2", "u"}), {M.dim}, {h.dim, M.dim});
  return out;
}

bool is_yd_morphism(const QuasiHopfAlgebra& h, const YDModule& M, const YDModule& N, const LinearMap& f) {
  const LinearMap idH = LinearMap::identity(h.field, {h.dim});
  return f.after(M.action) == N.action.after(idH.tensor(f)) &&
         idH.tensor(f).after(M.coaction) == N.coaction.after(f);
}

ValidationReport check_braiding_inverse(const QuasiHopfAlgebra& h, const YDModule& M, const YDModule& N) {
  ValidationReport r("yd");
  const LinearMap c = braiding(h, M, N);
  const LinearMap ci = braiding_inverse(h, M, N);
  const std::uint32_t d = M.dim * N.dim;
  const LinearMap id = id_map(h.field, d);
  const LinearMap a = c.after(ci), b = ci.after(c);
  for (std::uint32_t k = 0; k < d; ++k) {
    r.expect_equal("braiding_inverse", a.column(k), id.column(k), {k});
    r.expect_equal("braiding_inverse", b.column(k), id.column(k), {k});
  }
  return r;
}

ValidationReport check_hexagons(const QuasiHopfAlgebra& h, const YDModule& U, const YDModule& V, const YDModule& W) {
  ValidationReport r("yd");
  const FieldSpec f = h.field;
  const HModule u = U.module(), v = V.module(), w = W.module();
  const LinearMap idU = id_map(f, U.dim), idV = id_map(f, V.dim), idW = id_map(f, W.dim);
  const std::uint32_t d = U.dim * V.dim * W.dim;
  auto compare = [&](const std::string& label, const LinearMap& a, const LinearMap& b) {
    for (std::uint32_t k = 0; k < d; ++k) r.expect_equal(label, a.column(k), b.column(k), {k});
  };
  {
    // a_{V,W,U} c_{U,V⊗W} a_{U,V,W} = (id_V⊗c_{U,W}) a_{V,U,W} (c_{U,V}⊗id_W)
    const LinearMap lhs =
        associator(h, v, w, u).after(braiding(h, U, yd_tensor(h, V, W))).after(associator(h, u, v, w));
    const LinearMap rhs = flatten(idV.tensor(braiding(h, U, W)))
                              .after(associator(h, v, u, w))
                              .after(flatten(braiding(h, U, V).tensor(idW)));
    compare("hexagon_first", lhs, rhs);
  }
  {
    // a⁻¹_{W,U,V} c_{U⊗V,W} a⁻¹_{U,V,W} = (c_{U,W}⊗id_V) a⁻¹_{U,W,V} (id_U⊗c_{V,W})
    const LinearMap lhs = associator_inverse(h, w, u, v)
                              .after(braiding(h, yd_tensor(h, U, V), W))
                              .after(associator_inverse(h, u, v, w));
    const LinearMap rhs = flatten(braiding(h, U, W).tensor(idV))
                              .after(associator_inverse(h, u, w, v))
                              .after(flatten(idU.tensor(braiding(h, V, W))));
    compare("hexagon_second", lhs, rhs);
  }
  return r;
}

ValidationReport check_naturality(const QuasiHopfAlgebra& h, const YDModule& M, const YDModule& M2,
                                  const LinearMap& f, const YDModule& N) {
  ValidationReport r("yd");
  const FieldSpec k = h.field;
  const LinearMap idN = id_map(k, N.dim);
  r.record("naturality_morphism", is_yd_morphism(h, M, M2, f));
  const LinearMap a = braiding(h, N, M2).after(flatten(idN.tensor(f)));
  const LinearMap b = flatten(f.tensor(idN)).after(braiding(h, N, M));
  const LinearMap c = braiding(h, M2, N).after(flatten(f.tensor(idN)));
  const LinearMap e = flatten(idN.tensor(f)).after(braiding(h, M, N));
  for (std::uint32_t j = 0; j < M.dim * N.dim; ++j) {
    r.expect_equal("braiding_natural", a.column(j), b.column(j), {j});
    r.expect_equal("braiding_natural", c.column(j), e.column(j), {j});
  }
  return r;
}

}  // namespace qhopf
