#pragma once

// Independent implementations used as test oracles. They work on raw
// structure constants with explicit loops and share nothing with the
// leg-expression code under test beyond the algebra tables themselves.

#include "qhopf/biproduct.hpp"
#include "qhopf/instances.hpp"

namespace oracle {

using namespace qhopf;

inline std::uint32_t u32(Key k) { return static_cast<std::uint32_t>(k); }

/// Coefficient of e_c in e_a e_b.
inline Scalar mu(const QuasiHopfAlgebra& h, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return h.mult.column(Key(a) * h.dim + b).coeff_key(c);
}

/// Coefficient of e_b ⊗ e_c in Δ(e_a).
inline Scalar delta(const QuasiHopfAlgebra& h, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return h.comult.column(a).coeff_key(Key(b) * h.dim + c);
}

/// Classical Drinfeld double of a Hopf algebra on e^i ⋈ e_j:
/// (φ⋈h)(φ'⋈h') = φ(h₁⇀φ'↼S⁻¹(h₃)) ⋈ h₂h'.
inline LinearMap double_mult(const QuasiHopfAlgebra& h) {
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim, N = n * n;
  const LinearMap& si = h.s_inv();
  return LinearMap::from_function(f, {N, N}, {N}, [&](Key k) {
    const std::uint32_t A = u32(k / N), B = u32(k % N);
    const std::uint32_t a = A / n, b = A % n, c = B / n, d = B % n;
    TensorBuilder out(f, {N});
    for (std::uint32_t h1 = 0; h1 < n; ++h1)
      for (std::uint32_t t = 0; t < n; ++t)
        for (std::uint32_t h2 = 0; h2 < n; ++h2)
          for (std::uint32_t h3 = 0; h3 < n; ++h3) {
            const Scalar w = delta(h, b, h1, t) * delta(h, t, h2, h3);
            if (w.is_zero()) continue;
            // (h₁⇀e^c↼S⁻¹(h₃))(x) = e^c(S⁻¹(h₃) x h₁); then multiply by e^a
            for (std::uint32_t m = 0; m < n; ++m) {
              Scalar coeff = f.zero();
              for (std::uint32_t u = 0; u < n; ++u)
                for (std::uint32_t v = 0; v < n; ++v) {
                  const Scalar dw = delta(h, m, u, v);
                  if (dw.is_zero() || u != a) continue;
                  for (const auto& [s, sc] : si.column(h3).entries()) {
                    Scalar p = f.zero();
                    for (std::uint32_t y = 0; y < n; ++y) p += mu(h, u32(s), v, y) * mu(h, y, h1, c);
                    coeff += dw * sc * p;
                  }
                }
              if (coeff.is_zero()) continue;
              for (std::uint32_t r = 0; r < n; ++r) {
                const Scalar z = mu(h, h2, d, r);
                if (!z.is_zero()) out.add(Key(m) * n + r, w * coeff * z);
              }
            }
          }
    return out.finish();
  });
}

/// Δ(φ⋈h) = (φ₂⋈h₁) ⊗ (φ₁⋈h₂) with Δ(e^i) = Σ μ^i_{jk} e^j⊗e^k.
inline LinearMap double_comult(const QuasiHopfAlgebra& h) {
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim, N = n * n;
  return LinearMap::from_function(f, {N}, {N, N}, [&](Key k) {
    const std::uint32_t i = u32(k / n), j = u32(k % n);
    TensorBuilder out(f, {N, N});
    for (std::uint32_t p1 = 0; p1 < n; ++p1)
      for (std::uint32_t p2 = 0; p2 < n; ++p2) {
        const Scalar a = mu(h, p1, p2, i);
        if (a.is_zero()) continue;
        for (std::uint32_t h1 = 0; h1 < n; ++h1)
          for (std::uint32_t h2 = 0; h2 < n; ++h2) {
            const Scalar b = delta(h, j, h1, h2);
            if (!b.is_zero()) out.add((Key(p2) * n + h1) * N + Key(p1) * n + h2, a * b);
          }
      }
    return out.finish();
  });
}

/// Radford's biproduct B×H for a Hopf algebra H and a Hopf algebra B in its
/// Yetter-Drinfeld category, on b_k × e_j with flat index k·n + j.
struct Radford {
  LinearMap mult, comult, antipode;
};

inline Radford radford(const QuasiHopfAlgebra& h, const BraidedHopfAlgebra& b) {
  const FieldSpec f = h.field;
  const std::uint32_t n = h.dim, d = b.dim(), N = d * n;
  auto act = [&](std::uint32_t x, std::uint32_t y) -> const TensorElement& {
    return b.module.action.column(Key(x) * d + y);
  };
  // (b×h)(b'×h') = b(h₁·b') × h₂h'
  LinearMap mult = LinearMap::from_function(f, {N, N}, {N}, [&](Key k) {
    const std::uint32_t A = u32(k / N), C = u32(k % N);
    const std::uint32_t b1 = A / n, x = A % n, b2 = C / n, y = C % n;
    TensorBuilder out(f, {N});
    for (const auto& [hk, hc] : h.comult.column(x).entries()) {
      const std::uint32_t x1 = u32(hk / n), x2 = u32(hk % n);
      for (const auto& [ak, ac] : act(x1, b2).entries())
        for (const auto& [mk, mc] : b.mult.column(Key(b1) * d + ak).entries())
          for (const auto& [pk, pc] : h.mult.column(Key(x2) * n + y).entries())
            out.add(mk * n + pk, hc * ac * mc * pc);
    }
    return out.finish();
  });
  // Δ(b×h) = b₁ × (b₂)₋₁h₁ ⊗ (b₂)₀ × h₂
  LinearMap comult = LinearMap::from_function(f, {N}, {N, N}, [&](Key k) {
    const std::uint32_t bb = u32(k / n), x = u32(k % n);
    TensorBuilder out(f, {N, N});
    for (const auto& [ck, cc] : b.comult.column(bb).entries()) {
      const Key c1 = ck / d, c2 = ck % d;
      for (const auto& [lk, lc] : b.module.coaction.column(c2).entries()) {
        const Key lm = lk / d, l0 = lk % d;
        for (const auto& [hk, hc] : h.comult.column(x).entries()) {
          const Key x1 = hk / n, x2 = hk % n;
          for (const auto& [pk, pc] : h.mult.column(lm * n + x1).entries())
            out.add((c1 * n + pk) * N + l0 * n + x2, cc * lc * hc * pc);
        }
      }
    }
    return out.finish();
  });
  // S(b×h) = (1×S(b₋₁h))(S_B(b₀)×1)
  LinearMap antipode = LinearMap::from_function(f, {N}, {N}, [&](Key k) {
    const std::uint32_t bb = u32(k / n), x = u32(k % n);
    TensorBuilder acc(f, {N});
    for (const auto& [lk, lc] : b.module.coaction.column(bb).entries()) {
      const Key lm = lk / d, l0 = lk % d;
      for (const auto& [pk, pc] : h.mult.column(lm * n + x).entries())
        for (const auto& [sk, sc] : h.antipode.column(pk).entries())
          for (const auto& [uk, uc] : b.unit.entries())
            for (const auto& [tk, tc] : b.antipode.column(l0).entries())
              for (const auto& [ok, oc] : h.unit.entries())
                for (const auto& [rk, rc] : mult.column((uk * n + sk) * N + tk * n + ok).entries())
                  acc.add(rk, lc * pc * sc * uc * tc * oc * rc);
    }
    return acc.finish();
  });
  return {std::move(mult), std::move(comult), std::move(antipode)};
}

}  // namespace oracle
