#include "qhopf/double.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

namespace {

using Names = std::vector<std::string>;
using Columns = std::vector<std::vector<TensorElement::Entry>>;

LegExpr E(const TensorElement& t, Names names) { return LegExpr(t.with_dual_mask(0), std::move(names)); }

LinearMap from_columns(FieldSpec f, Shape src, Shape tgt, Columns& cols) {
  std::vector<TensorElement> out;
  out.reserve(cols.size());
  for (auto& c : cols) out.push_back(TensorElement::from_entries(f, tgt, std::move(c)));
  return LinearMap(f, std::move(src), std::move(tgt), std::move(out));
}

/// Componentwise product with one multiplication table per leg.
TensorElement mixed_product(const TensorElement& a, const TensorElement& b, const std::vector<const LinearMap*>& mults) {
  Names an, bn, order;
  for (std::size_t j = 0; j < mults.size(); ++j) {
    an.push_back("a" + std::to_string(j));
    bn.push_back("b" + std::to_string(j));
    order.push_back("a" + std::to_string(j));
  }
  LegExpr e = E(a, an) * E(b, bn);
  for (std::size_t j = 0; j < mults.size(); ++j) e.merge(*mults[j], an[j], {an[j], bn[j]});
  return e.take(order);
}

TensorElement mixed_chain(const std::vector<TensorElement>& factors, const std::vector<const LinearMap*>& mults) {
  TensorElement acc = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) acc = mixed_product(acc, factors[k], mults);
  return acc;
}

}  // namespace

TensorElement compute_omega(const QuasiHopfAlgebra& h, const DerivedElements& d) {
  const LinearMap& m = h.mult;
  const LinearMap& c = h.comult;
  LegExpr e = E(h.phi, {"X1", "X2", "X3"});
  e.split(c, "X1", "A", "o3").split(c, "A", "o1", "o2");
  e = e * E(h.phi_inv, {"y1", "y2", "y3"});
  e.merge(m, "o1", {"o1", "y1"}).merge(m, "o2", {"o2", "y2"}).merge(m, "o3", {"o3", "y3"});
  e = e * E(h.phi_inv, {"x1", "x2", "x3"});
  e.split(c, "x2", "x21", "x22");
  e.merge(m, "o1", {"o1", "x1"}).merge(m, "o2", {"o2", "x21"}).merge(m, "o3", {"o3", "x22"});
  e = e * E(d.f, {"f1", "f2"});
  e.merge(m, "o4", {"f1", "X2", "x3"}).merge(m, "o5", {"f2", "X3"});
  e.map(h.s_inv(), "o4").map(h.s_inv(), "o5");
  return e.take({"o1", "o2", "o3", "o4", "o5"});
}

TensorElement double_element(const DoubleAlgebra& d, const TensorElement& phi, const TensorElement& h) {
  const std::uint32_t n = d.base.dim;
  return outer(phi.with_dual_mask(0), h.with_dual_mask(0)).reshaped({n * n});
}

namespace {

std::vector<std::string> double_labels(const QuasiHopfAlgebra& h) {
  std::vector<std::string> out;
  for (const auto& a : h.labels) {
    for (const auto& b : h.labels) out.push_back("[" + a + "|" + b + "]");
  }
  return out;
}

LinearMap double_mult(const QuasiHopfAlgebra& h, const TensorElement& omega) {
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim, N = n * n;
  const LinearMap& m = h.mult;
  LegExpr e = E(omega, {"o1", "o2", "o3", "o4", "o5"}) * E(h.tagged(), {"M", "m"});
  e.split(h.comult, "m", "m1", "m2");
  e.merge(m, "L1", {"o5", "m1", "o1"}).merge(m, "q", {"o4", "m2", "o2"});
  e = e * E(h.tagged(), {"B", "h"});
  e.split(h.comult, "h", "h1", "h2").split(h.comult, "h1", "h11", "h12").map(h.s_inv(), "h2");
  e.merge(m, "L2", {"h2", "q", "h11"}).merge(m, "L3", {"o3", "h12"});
  const TensorElement t = e.take({"M", "B", "L1", "L2", "L3"});
  Columns cols(std::size_t(N) * N);
  IndexBuf idx{};
  for (const auto& [key, c] : t.entries()) {
    t.decode(key, idx);
    const std::uint32_t M = idx[0], b = idx[1], a = idx[2], cc = idx[3], l3 = idx[4];
    for (std::uint32_t dd = 0; dd < n; ++dd) {
      auto& col = cols[(Key(a) * n + b) * N + (Key(cc) * n + dd)];
      for (const auto& [r, v] : m.column(Key(l3) * n + dd).entries()) col.emplace_back(Key(M) * n + r, c * v);
    }
  }
  return from_columns(f, {N, N}, {N}, cols);
}

LinearMap double_comult(const QuasiHopfAlgebra& h, const DerivedElements& d) {
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim, N = n * n;
  const LinearMap& m = h.mult;
  const LinearMap& c = h.comult;
  const LinearMap& si = h.s_inv();
  // constants C1..C5 with a = X¹Y¹
  LegExpr e = E(h.phi, {"X1", "X2", "X3"}) * E(h.phi, {"Y1", "Y2", "Y3"});
  e.merge(m, "a", {"X1", "Y1"}).split(c, "X2", "X21", "X22");
  e.merge(m, "c5", {"X22", "Y3"}).merge(m, "c2", {"X21", "Y2"}).map(si, "X3").rename("X3", "c1");
  e.split(c, "a", "a1", "a2").split(c, "a1", "a11", "a12").map(si, "a2");
  e = e * E(d.p_R, {"p1", "p2"});
  e.split(c, "p1", "p11", "p12").map(si, "p2");
  e.merge(m, "c2", {"c2", "p2", "a2"}).merge(m, "c3", {"a11", "p11"}).merge(m, "c4", {"a12", "p12"});
  e = e * E(h.phi_inv, {"x1", "x2", "x3"});
  e.merge(m, "c3", {"c3", "x1"}).merge(m, "c4", {"c4", "x2"}).merge(m, "c5", {"c5", "x3"});
  // W = C1 e_t C2 e_u C3, left H part C4 h₁, right H part C5 h₂
  e = e * E(h.tagged(), {"T", "t"});
  e.merge(m, "w", {"c1", "t", "c2"});
  e = e * E(h.tagged(), {"U", "u"});
  e.merge(m, "w", {"w", "u", "c3"});
  e = e * E(h.tagged(), {"B", "h"});
  e.split(c, "h", "h1", "h2").merge(m, "ls", {"c4", "h1"}).merge(m, "lt", {"c5", "h2"});
  const TensorElement t = e.take({"w", "B", "U", "ls", "T", "lt"});
  Columns cols(N);
  IndexBuf idx{};
  for (const auto& [key, v] : t.entries()) {
    t.decode(key, idx);
    cols[Key(idx[0]) * n + idx[1]].emplace_back((Key(idx[2]) * n + idx[3]) * N + (Key(idx[4]) * n + idx[5]), v);
  }
  return from_columns(f, {N}, {N, N}, cols);
}

TensorElement compute_u_elt(const QuasiHopfAlgebra& h, const DerivedElements& d) {
  LegExpr e = E(d.f_inv, {"g1", "g2"}) * E(d.q_R, {"q1", "q2"});
  e.map(h.antipode, "q1").map(h.antipode, "q2");
  e.merge(h.mult, "u1", {"g1", "q2"}).merge(h.mult, "u2", {"g2", "q1"});
  return e.take({"u1", "u2"});
}

LinearMap double_antipode(const QuasiHopfAlgebra& h, const DerivedElements& d, const TensorElement& U) {
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim, N = n * n;
  const LinearMap& m = h.mult;
  const LinearMap& c = h.comult;
  const LinearMap& si = h.s_inv();
  LegExpr e = E(h.tagged(), {"B", "b"});
  e.map(h.antipode, "b");
  e = e * E(d.f, {"f1", "f2"});
  e.merge(m, "a", {"b", "f1"}).split(c, "a", "a1", "a2").split(c, "a1", "a11", "a12").map(si, "a2");
  e = e * E(d.p_R, {"p1", "p2"});
  e.split(c, "p1", "p11", "p12").map(si, "p2");
  e = e * E(U, {"U1", "U2"});
  e.merge(m, "hs", {"a12", "p12", "U2"});
  e = e * E(h.tagged(), {"M", "m"});
  e.merge(m, "w", {"f2", "p2", "a2", "m", "a11", "p11", "U1"}).map(si, "w");
  const TensorElement t = e.take({"w", "B", "M", "hs"});
  Columns cols(N);
  IndexBuf idx{};
  for (const auto& [key, v] : t.entries()) {
    t.decode(key, idx);
    cols[Key(idx[0]) * n + idx[1]].emplace_back(Key(idx[2]) * n + idx[3], v);
  }
  return from_columns(f, {N}, {N}, cols);
}

}  // namespace

DoubleAlgebra build_double_unchecked(const QuasiHopfAlgebra& h) {
  h.s_inv();
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim, N = n * n;
  DoubleAlgebra d;
  d.base = h;
  d.derived = derive_all(h);
  d.dual = build_dual(h, true);
  d.omega = compute_omega(h, d.derived);
  d.U = compute_u_elt(h, d.derived);

  std::vector<Scalar> eps(n);
  for (std::uint32_t j = 0; j < n; ++j) eps[j] = h.eps(h.basis(j));
  d.inclusion = LinearMap::from_function(f, {n}, {N}, [&](Key k) {
    std::vector<TensorElement::Entry> e;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (!eps[j].is_zero()) e.emplace_back(Key(j) * n + k, eps[j]);
    }
    return TensorElement::from_entries(f, {N}, std::move(e));
  });
  const LinearMap& i = d.inclusion;

  LinearMap mult = double_mult(h, d.omega);
  LinearMap comult = double_comult(h, d.derived);
  const TensorElement s_inv_alpha = h.s_inv().apply(h.alpha);
  LinearMap counit = LinearMap::from_function(f, {N}, {}, [&](Key k) {
    return TensorElement::scalar(eps[k % n] * s_inv_alpha.coeff_key(k / n));
  });
  LinearMap antipode = double_antipode(h, d.derived, d.U);
  TensorElement phi = apply_on_legs({&i, &i, &i}, h.phi);
  TensorElement phi_inv = apply_on_legs({&i, &i, &i}, h.phi_inv);
  d.inner = make_quasi_hopf(f, double_labels(h), std::move(mult), i.apply(h.unit), std::move(comult),
                            std::move(counit), std::move(phi), std::move(phi_inv), std::move(antipode),
                            i.apply(h.alpha), i.apply(h.beta));

  // **D** = Σ S⁻¹(p²)e_ip¹₁ ⊗ (e^i ⋈ p¹₂)
  LegExpr g = E(d.derived.p_R, {"p1", "p2"}) * E(h.tagged(), {"I", "x"});
  g.split(h.comult, "p1", "p11", "p12").map(h.s_inv(), "p2").merge(h.mult, "k", {"p2", "x", "p11"});
  d.generating = g.take({"k", "I", "p12"}).reshaped({n, N});
  TensorElement R = apply_on_leg(i, d.generating, 0);
  d.R.R = R;
  d.R.R_inv = invert_element(R, d.inner.mult, d.inner.unit);
  return d;
}

ValidationReport verify_generating_relations(const DoubleAlgebra& d) {
  ValidationReport r("double");
  const QuasiHopfAlgebra& h = d.base;
  const QuasiHopfAlgebra& D = d.inner;
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim, N = D.dim;
  const LinearMap& i = d.inclusion;
  const LinearMap& mH = h.mult;
  const LinearMap& mD = D.mult;

  for (std::uint32_t a = 0; a < n; ++a) {
    const TensorElement ia = i.column(a);
    r.expect_equal("dcomult_on_h", D.comult.apply(ia), apply_on_legs({&i, &i}, h.comult.column(a)), {a});
    r.expect_equal("dcounit_on_h", D.counit.apply(ia), h.counit.column(a), {a});
    r.expect_equal("dantipode_on_h", D.antipode.apply(ia), i.apply(h.antipode.column(a)), {a});
    for (std::uint32_t b = 0; b < n; ++b) {
      r.expect_equal("inclusion_multiplicative", D.mul(ia, i.column(b)), i.apply(mH.column(Key(a) * n + b)), {a, b});
    }
  }
  r.expect_equal("inclusion_unital", i.apply(h.unit), D.one(), {});

  const TensorElement& G = d.generating;
  const TensorElement oneD = D.one();
  {
    // (id⊗Δ_D)(D) = x³⊗i(x¹)⊗i(x²) · D¹⊗1⊗D² · X²⊗i(X¹)⊗i(X³) · D¹⊗D²⊗1 · x¹⊗i(x²)⊗i(x³)
    const std::vector<std::size_t> p231{2, 0, 1}, p213{1, 0, 2};
    const TensorElement a = apply_on_legs({nullptr, &i, &i}, permute_legs(h.phi_inv, p231));
    const TensorElement b = apply_on_legs({nullptr, &i, &i}, permute_legs(h.phi, p213));
    const TensorElement c = apply_on_legs({nullptr, &i, &i}, h.phi_inv);
    const std::vector<std::size_t> p132{0, 2, 1};
    const TensorElement g13 = permute_legs(outer(G, oneD), p132);
    const TensorElement g12 = outer(G, oneD);
    const TensorElement rhs = mixed_chain({a, g13, b, g12, c}, {&mH, &mD, &mD});
    const TensorElement lhs = apply_on_leg(D.comult, G, 1);
    r.expect_equal("dcomult_generating", lhs, rhs);
  }
  {
    // (id⊗ε_D)(D) and (ε⊗id)(D); both are units, the first through i_D
    const TensorElement l = apply_on_leg(D.counit, G, 1);
    const TensorElement rr = apply_on_leg(h.counit, G, 0);
    r.expect_equal("dcounit_generating", i.apply(l), rr);
    r.expect_equal("dcounit_generating_unit", rr, oneD);
  }
  {
    // (S⊗S_D)(D) = (id⊗i)(f₂₁) D (id⊗i)(f⁻¹)
    const TensorElement lhs = apply_on_legs({&h.antipode, &D.antipode}, G);
    const TensorElement f21 = apply_on_leg(i, flip(d.derived.f), 1);
    const TensorElement fi = apply_on_leg(i, d.derived.f_inv, 1);
    r.expect_equal("dantipode_generating", lhs, mixed_chain({f21, G, fi}, {&mH, &mD}));
  }
  {
    // (ε⋈h)(φ⋈h') = h_(1,1)⇀φ↼S⁻¹(h₂) ⋈ h_(1,2)h' and (φ⋈h)(ε⋈h') = φ⋈hh'
    LegExpr e = E(h.tagged(), {"B", "h"}) * E(h.tagged(), {"S", "s"}) * E(h.tagged(), {"C", "c"});
    e.split(h.comult, "h", "h1", "h2").split(h.comult, "h1", "h11", "h12").map(h.s_inv(), "h2");
    e.merge(mH, "w", {"h2", "s", "h11"}).merge(mH, "k", {"h12", "c"});
    const TensorElement rhs = e.take({"B", "w", "C", "S", "k"}).reshaped({n, n, n, N});
    TensorBuilder lb(f, {n, n, n, N}), rb(f, {n, n, n, N});
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t c = 0; c < n; ++c) {
          const TensorElement l = D.mul(i.column(b), D.basis(x * n + c));
          for (const auto& [k, v] : l.entries()) lb.add((Key(b) * n + x) * n * N + Key(c) * N + k, v);
          const TensorElement rr = D.mul(D.basis(x * n + b), i.column(c));
          for (const auto& [k, v] : rr.entries()) rb.add((Key(x) * n + b) * n * N + Key(c) * N + k, v);
        }
      }
    }
    r.expect_equal("left_mult_h", lb.finish(), rhs);
    LegExpr e2 = E(h.tagged(), {"X", "x"}) * E(h.tagged(), {"B", "b"}) * E(h.tagged(), {"C", "c"});
    e2.merge(mH, "k", {"b", "c"});
    r.expect_equal("right_mult_h", rb.finish(), e2.take({"X", "B", "C", "x", "k"}).reshaped({n, n, n, N}));
  }
  {
    // Σ (ε⋈q¹)(p¹₁⇀φ↼q²S⁻¹(p²) ⋈ p¹₂) = φ⋈1 on every e^i
    LegExpr e = E(d.derived.p_R, {"p1", "p2"}) * E(d.derived.q_R, {"q1", "q2"}) * E(h.tagged(), {"T", "t"});
    e.split(h.comult, "p1", "p11", "p12").map(h.s_inv(), "p2").merge(mH, "w", {"q2", "p2", "t", "p11"});
    LegExpr l(e.take({"w", "q1", "T", "p12"}).reshaped({n, n, N}), {"w", "q", "d"});
    l.map(i, "q").merge(mD, "d", {"q", "d"});
    LegExpr rr(h.tagged(), {"w", "x"});
    rr.map(LinearMap::from_function(f, {n}, {N}, [&](Key k) {
        return double_element(d, h.basis(static_cast<std::uint32_t>(k)), h.unit);
      }), "x");
    r.expect_equal("pq_double_identity", l.take({"w", "d"}), rr.take({"w", "x"}));
  }
  return r;
}

ValidationReport verify_double(const DoubleAlgebra& d) {
  ValidationReport r("double");
  r.append(validate_all(d.inner));
  r.append(validate_r_matrix(d.inner, d.R.R).report);
  r.append(verify_generating_relations(d));
  return r;
}

DoubleAlgebra build_double(const QuasiHopfAlgebra& h) {
  DoubleAlgebra d = build_double_unchecked(h);
  require_valid(verify_double(d));
  return d;
}

}  // namespace qhopf
