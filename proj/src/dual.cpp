#include "qhopf/dual.hpp"

#include <tuple>

#include "qhopf/errors.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

namespace {

using Names = std::vector<std::string>;

LegExpr E(const TensorElement& t, Names names) { return LegExpr(t.with_dual_mask(0), std::move(names)); }

}  // namespace

TensorElement dual_basis(const QuasiHopfAlgebra& h, std::uint32_t i) { return h.basis(i).with_dual_mask(1); }

DualStructure build_dual(const QuasiHopfAlgebra& h, bool require_inverse) {
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim;
  const LinearMap& m = h.mult;
  const LinearMap& d = h.comult;
  DualStructure ds;
  ds.dim = n;

  std::vector<std::vector<TensorElement::Entry>> cm(n), lh(n * n), rh(n * n), dl(n * n), dr(n * n), cv(n * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      // e_i e_j = Σ_k c_k e_k feeds Δ̂(e^k), e_j⇀e^k at e_i and e^k↼e_i at e_j.
      for (const auto& [k, c] : m.column(Key(i) * n + j).entries()) {
        cm[k].emplace_back(Key(i) * n + j, c);
        lh[j * n + k].emplace_back(i, c);
        rh[k * n + i].emplace_back(j, c);
      }
    }
    // Δ(e_i) = Σ c e_a⊗e_b feeds e^b⇀e_i, e_i↼e^a and e^a e^b at e_i.
    for (const auto& [k, c] : d.column(i).entries()) {
      const Key a = k / n, b = k % n;
      dl[b * n + i].emplace_back(a, c);
      dr[i * n + a].emplace_back(b, c);
      cv[a * n + b].emplace_back(i, c);
    }
  }
  auto cols = [&](std::vector<std::vector<TensorElement::Entry>>& src, Shape tgt) {
    std::vector<TensorElement> out;
    for (auto& e : src) out.push_back(TensorElement::from_entries(f, tgt, std::move(e)));
    return out;
  };
  ds.comult = LinearMap(f, {n}, {n, n}, cols(cm, {n, n}));
  ds.left_hit = LinearMap(f, {n, n}, {n}, cols(lh, {n}));
  ds.right_hit = LinearMap(f, {n, n}, {n}, cols(rh, {n}));
  ds.dual_left = LinearMap(f, {n, n}, {n}, cols(dl, {n}));
  ds.dual_right = LinearMap(f, {n, n}, {n}, cols(dr, {n}));
  ds.convolution = LinearMap(f, {n, n}, {n}, cols(cv, {n}));
  {
    std::vector<TensorElement::Entry> e;
    for (std::uint32_t i = 0; i < n; ++i) e.emplace_back(i, h.eps(h.basis(i)));
    ds.counit = TensorElement::from_entries(f, {n}, std::move(e)).with_dual_mask(1);
  }
  auto transpose = [&](const LinearMap& s) {
    std::vector<std::vector<TensorElement::Entry>> t(n);
    for (std::uint32_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : s.column(j).entries()) t[k].emplace_back(j, c);
    }
    return LinearMap(f, {n}, {n}, cols(t, {n}));
  };
  ds.s_bar = transpose(h.antipode);
  if (h.antipode_inv) {
    ds.s_bar_inv = transpose(*h.antipode_inv);
  } else if (require_inverse) {
    throw AntipodeNotInvertible("S̄⁻¹ requires a bijective antipode");
  }
  return ds;
}

TensorElement convolution(const DualStructure& d, const TensorElement& phi, const TensorElement& psi) {
  return d.convolution.apply(outer(phi.with_dual_mask(0), psi.with_dual_mask(0))).with_dual_mask(1);
}

ValidationReport verify_dual(const QuasiHopfAlgebra& h, const DualStructure& ds) {
  ValidationReport r("dual");
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim;
  const LinearMap id = LinearMap::identity(f, {n});
  const LinearMap& m = h.mult;
  // ⟨φ, h⟩ on (φ, h)
  const LinearMap pairing = LinearMap::from_function(
      f, {n, n}, {}, [&](Key k) { return TensorElement::scalar(k / n == k % n ? f.one() : f.zero()); });
  {
    const LinearMap a = ds.comult.tensor(id).after(ds.comult);
    const LinearMap b = id.tensor(ds.comult).after(ds.comult);
    for (std::uint32_t k = 0; k < n; ++k) r.expect_equal("dual_coassociative", a.column(k), b.column(k), {k});
  }
  {
    // evaluation at the unit is the counit of H*
    const LinearMap at_one = LinearMap::from_function(
        f, {n}, {}, [&](Key k) { return TensorElement::scalar(h.unit.coeff_key(k)); });
    for (std::uint32_t k = 0; k < n; ++k) {
      r.expect_equal("dual_counit", apply_on_leg(at_one, ds.comult.column(k), 0), h.basis(k), {k});
      r.expect_equal("dual_counit", apply_on_leg(at_one, ds.comult.column(k), 1), h.basis(k), {k});
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t k = 0; k < n; ++k) {
      const TensorElement& lhs = ds.left_hit.column(Key(a) * n + k);
      const TensorElement& rhs = ds.right_hit.column(Key(k) * n + a);
      for (std::uint32_t j = 0; j < n; ++j) {
        r.record("dual_left_hit", lhs.coeff_key(j) == m.column(Key(j) * n + a).coeff_key(k), {a, k, j});
        r.record("dual_right_hit", rhs.coeff_key(j) == m.column(Key(a) * n + j).coeff_key(k), {k, a, j});
      }
    }
  }
  {
    // φ⇀h = φ(h₂)h₁ and h↼φ = φ(h₁)h₂
    LegExpr a = E(h.tagged(), {"t", "h"}) * E(h.tagged(), {"s", "p"});
    a.split(h.comult, "h", "1", "2").apply(pairing, {"p", "2"}, {});
    LegExpr b = E(h.tagged(), {"t", "h"}) * E(h.tagged(), {"s", "p"});
    b.apply(ds.dual_left, {"p", "h"}, {"1"});
    r.expect_equal("dual_arrow_left", a.take({"t", "s", "1"}), b.take({"t", "s", "1"}));
    LegExpr c = E(h.tagged(), {"t", "h"}) * E(h.tagged(), {"s", "p"});
    c.split(h.comult, "h", "1", "2").apply(pairing, {"p", "1"}, {});
    LegExpr e = E(h.tagged(), {"t", "h"}) * E(h.tagged(), {"s", "p"});
    e.apply(ds.dual_right, {"h", "p"}, {"2"});
    r.expect_equal("dual_arrow_right", c.take({"t", "s", "2"}), e.take({"t", "s", "2"}));
  }
  {
    // (h⇀φ)↼h' = h⇀(φ↼h')
    LegExpr a = E(h.tagged(), {"t", "h"}) * E(h.tagged(), {"s", "p"}) * E(h.tagged(), {"u", "g"});
    LegExpr b = a;
    a.apply(ds.left_hit, {"h", "p"}, {"p"}).apply(ds.right_hit, {"p", "g"}, {"p"});
    b.apply(ds.right_hit, {"p", "g"}, {"p"}).apply(ds.left_hit, {"h", "p"}, {"p"});
    r.expect_equal("dual_bimodule", a.take({"t", "s", "u", "p"}), b.take({"t", "s", "u", "p"}));
  }
  for (std::uint32_t k = 0; k < n; ++k) {
    // Δ̂S̄ = (S̄⊗S̄)Δ̂^cop
    TensorElement lhs = ds.comult.apply(ds.s_bar.column(k));
    TensorElement rhs = flip(apply_on_legs({&ds.s_bar, &ds.s_bar}, ds.comult.column(k)));
    r.expect_equal("dual_antipode_antimorphism", lhs, rhs, {k});
  }
  {
    // [φψ]ξ = (X¹⇀φ↼x¹)[(X²⇀ψ↼x²)(X³⇀ξ↼x³)]
    LegExpr tags = E(h.tagged(), {"a", "p"}) * E(h.tagged(), {"b", "q"}) * E(h.tagged(), {"c", "w"});
    LegExpr lhs = tags;
    lhs.apply(ds.convolution, {"p", "q"}, {"v"}).apply(ds.convolution, {"v", "w"}, {"v"});
    LegExpr rhs = tags * E(h.phi, {"X1", "X2", "X3"}) * E(h.phi_inv, {"x1", "x2", "x3"});
    for (auto [leg, X, x] : {std::tuple{"p", "X1", "x1"}, {"q", "X2", "x2"}, {"w", "X3", "x3"}}) {
      rhs.apply(ds.left_hit, {X, leg}, {leg}).apply(ds.right_hit, {leg, x}, {leg});
    }
    rhs.apply(ds.convolution, {"q", "w"}, {"v"}).apply(ds.convolution, {"p", "v"}, {"v"});
    r.expect_equal("convolution_quasi_associative", lhs.take({"a", "b", "c", "v"}), rhs.take({"a", "b", "c", "v"}));
  }
  for (std::uint32_t k = 0; k < n; ++k) {
    TensorElement e = dual_basis(h, k);
    r.expect_equal("convolution_unit", convolution(ds, ds.counit, e).with_dual_mask(0), h.basis(k), {k});
    r.expect_equal("convolution_unit", convolution(ds, e, ds.counit).with_dual_mask(0), h.basis(k), {k});
  }
  return r;
}

}  // namespace qhopf
