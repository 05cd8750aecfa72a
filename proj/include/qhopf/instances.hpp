#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

/// A finite group by its multiplication table on elements 0..N-1.
struct Group {
  std::uint32_t order = 0;
  std::vector<std::uint32_t> table;  // table[a*N+b] = ab
  std::vector<std::uint32_t> inverse;
  std::uint32_t identity = 0;
  std::vector<std::string> labels;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a * order + b]; }
};

Group cyclic_group(std::uint32_t n);
Group direct_product(const Group& a, const Group& b);
/// Throws ValidationFailed unless the table is a group with the stated
/// identity and inverses.
void validate_group(const Group& g);

/// ω: G³ → k^×, stored as values[(a*N+b)*N+c].
struct ThreeCocycle {
  FieldSpec field;
  std::uint32_t order = 0;
  std::vector<Scalar> values;

  const Scalar& operator()(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    return values[(a * order + b) * order + c];
  }
};

ThreeCocycle trivial_cocycle(const Group& g, FieldSpec field);
/// ω(a,b,c) = ζ^{a(b+c-[b+c])/n} on Z_n, for ζ an n-th root of unity in the field.
ThreeCocycle cyclic_cocycle(const Group& zn, const Scalar& zeta);
ThreeCocycle product_cocycle(const Group& a, const ThreeCocycle& wa, const Group& b, const ThreeCocycle& wb);
/// First (a,b,c,d) violating normalization or the cocycle identity
/// ω(b,c,d)ω(a,bc,d)ω(a,b,c) = ω(ab,c,d)ω(a,b,cd); empty when ω is valid.
std::vector<std::uint32_t> cocycle_defect(const Group& g, const ThreeCocycle& w);

/// kG with Φ = 1⊗1⊗1, S(g) = g⁻¹, α = β = 1.
QuasiHopfAlgebra group_algebra(const Group& g, FieldSpec field);
/// k^G with reassociator Σ ω(x,y,z)⁻¹ δ_x⊗δ_y⊗δ_z, S(δ_x) = δ_{x⁻¹}, α = 1 and
/// β = Σ ω(x,x⁻¹,x) δ_x. Throws CocycleInvalid.
QuasiHopfAlgebra function_algebra(const Group& g, const ThreeCocycle& w);
/// Same construction without the cocycle check.
QuasiHopfAlgebra function_algebra_unchecked(const Group& g, const ThreeCocycle& w);

/// Sweedler's 4-dimensional Hopf algebra on the basis 1, g, x, gx.
/// Throws BadCharacteristic in characteristic 2.
QuasiHopfAlgebra sweedler_hopf(FieldSpec field);
/// ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)
TensorElement sweedler_r0(const QuasiHopfAlgebra& h);

/// Σ_{x,y} r(x,y) δ_x⊗δ_y on k^G.
TensorElement function_algebra_r(const QuasiHopfAlgebra& h, const std::vector<Scalar>& r);

struct NamedInstance {
  std::string name;
  std::string description;
  QuasiHopfAlgebra algebra;
  std::optional<TensorElement> r_matrix;
};

/// Every bundled instance, validated on construction.
std::vector<NamedInstance> bundled_instances();
/// Looks up a bundled instance by name; throws Error for unknown names.
NamedInstance bundled_instance(const std::string& name);
std::vector<std::string> bundled_names();

/// Deliberately corrupted instances together with the label that must fail.
struct NegativeInstance {
  std::string name;
  std::string expected_label;
  QuasiHopfAlgebra algebra;
};
std::vector<NegativeInstance> negative_instances();

}  // namespace qhopf
