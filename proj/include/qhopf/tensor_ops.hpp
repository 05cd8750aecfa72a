#pragma once

#include <vector>

#include "qhopf/linear_map.hpp"

namespace qhopf {

/// Componentwise product in H^⊗k, where `mult` is the table H⊗H→H.
TensorElement leg_multiply(const TensorElement& a, const TensorElement& b, const LinearMap& mult);

/// 1^⊗k for the unit `unit` of H.
TensorElement unit_power(const TensorElement& unit, std::size_t k);

/// Places leg j of `e` at slot positions[j] (1-based) of H^⊗m and the unit
/// of H in every other slot.
TensorElement embed_legs(const TensorElement& e, const std::vector<std::size_t>& positions, std::size_t m,
                         const TensorElement& unit);

/// Applies `map` (source degree 1) to leg `leg` (0-based); the map's output
/// legs take its place.
TensorElement apply_on_leg(const LinearMap& map, const TensorElement& e, std::size_t leg);
/// Applies one map per leg; a null entry leaves the leg unchanged.
TensorElement apply_on_legs(const std::vector<const LinearMap*>& maps, const TensorElement& e);

/// Two-sided inverse in H^⊗k via an exact linear solve; throws NotInvertible.
TensorElement invert_element(const TensorElement& a, const LinearMap& mult, const TensorElement& unit);

/// ⟨φ, h⟩ for φ in H* and h in H, both given in their (dual) bases.
Scalar pair_dual(const TensorElement& phi, const TensorElement& h);

/// Left multiplication by a as a map H^⊗k → H^⊗k.
LinearMap left_multiplication(const TensorElement& a, const LinearMap& mult);

/// Σ_i e_i ⊗ e_i in V⊗V for dim V = dim.
TensorElement diagonal(FieldSpec field, std::uint32_t dim);

/// The map whose graph is g: g has the source legs followed by the target
/// legs, and the image of source key s is the slice g(s, ·).
LinearMap map_from_graph(const TensorElement& g, Shape source, Shape target);

/// Same columns, source and target regarded as single legs.
LinearMap flatten(const LinearMap& m);

}  // namespace qhopf
