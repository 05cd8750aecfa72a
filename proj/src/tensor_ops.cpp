#include "qhopf/tensor_ops.hpp"

#include <string>

#include "qhopf/errors.hpp"
#include "qhopf/leg_expr.hpp"
#include "qhopf/linalg.hpp"

namespace qhopf {

namespace {

void check_mult(const LinearMap& mult) {
  if (mult.source().size() != 2 || mult.target().size() != 1 || mult.source()[0] != mult.target()[0] ||
      mult.source()[1] != mult.target()[0]) {
    throw DimensionMismatch("not a multiplication table H⊗H→H");
  }
}

}  // namespace

TensorElement leg_multiply(const TensorElement& a, const TensorElement& b, const LinearMap& mult) {
  check_mult(mult);
  if (a.shape() != b.shape()) {
    throw DimensionMismatch("leg_multiply of " + shape_string(a.shape()) + " and " + shape_string(b.shape()));
  }
  if (a.field() != b.field() || a.field() != mult.field()) throw FieldMismatch("leg_multiply over different fields");
  const std::size_t k = a.degree();
  if (k == 0) return TensorElement::scalar(a.scalar_value() * b.scalar_value());
  const std::uint32_t n = mult.target()[0];
  if (a.dim() != n) throw DimensionMismatch("tensor legs do not match the multiplication table");

  // Merge leg pairs one at a time so that partial products are shared.
  std::vector<std::string> names;
  for (std::size_t j = 0; j < k; ++j) names.push_back("a" + std::to_string(j));
  for (std::size_t j = 0; j < k; ++j) names.push_back("b" + std::to_string(j));
  std::vector<std::string> an(names.begin(), names.begin() + k), bn(names.begin() + k, names.end());
  LegExpr e = LegExpr(a, an) * LegExpr(b, bn);
  std::vector<std::string> order;
  for (std::size_t j = 0; j < k; ++j) {
    const std::string out = "c" + std::to_string(j);
    e.apply(mult, {an[j], bn[j]}, {out});
    order.push_back(out);
  }
  return e.take(order).with_dual_mask(a.dual_mask());
}

TensorElement unit_power(const TensorElement& unit, std::size_t k) {
  TensorElement t = TensorElement::scalar(unit.field().one());
  for (std::size_t j = 0; j < k; ++j) t = outer(t, unit);
  return t;
}

TensorElement embed_legs(const TensorElement& e, const std::vector<std::size_t>& positions, std::size_t m,
                         const TensorElement& unit) {
  if (positions.size() != e.degree()) throw DimensionMismatch("embed_legs: one position per leg required");
  std::vector<bool> used(m, false);
  for (auto p : positions) {
    if (p < 1 || p > m) throw DimensionMismatch("embed_legs: slot " + std::to_string(p) + " out of range");
    if (used[p - 1]) throw DimensionMismatch("embed_legs: slot " + std::to_string(p) + " used twice");
    used[p - 1] = true;
  }
  // Append units for the free slots, then move every leg to its slot.
  TensorElement t = e;
  std::vector<std::size_t> source_of(m);
  for (std::size_t j = 0; j < positions.size(); ++j) source_of[positions[j] - 1] = j;
  std::size_t next = e.degree();
  for (std::size_t s = 0; s < m; ++s) {
    if (!used[s]) {
      t = outer(t, unit);
      source_of[s] = next++;
    }
  }
  return permute_legs(t, source_of);
}

TensorElement apply_on_leg(const LinearMap& map, const TensorElement& e, std::size_t leg) {
  if (map.source_degree() != 1) throw DimensionMismatch("apply_on_leg needs a map of source degree 1");
  if (leg >= e.degree()) throw DimensionMismatch("apply_on_leg: leg " + std::to_string(leg) + " out of range");
  std::vector<std::string> names, order;
  for (std::size_t j = 0; j < e.degree(); ++j) names.push_back("l" + std::to_string(j));
  std::vector<std::string> outs;
  for (std::size_t j = 0; j < map.target_degree(); ++j) outs.push_back("o" + std::to_string(j));
  for (std::size_t j = 0; j < e.degree(); ++j) {
    if (j == leg) {
      order.insert(order.end(), outs.begin(), outs.end());
    } else {
      order.push_back(names[j]);
    }
  }
  LegExpr x(e.with_dual_mask(0), names);
  x.apply(map, {names[leg]}, outs);
  return x.take(order);
}

TensorElement apply_on_legs(const std::vector<const LinearMap*>& maps, const TensorElement& e) {
  if (maps.size() != e.degree()) throw DimensionMismatch("apply_on_legs: one map per leg required");
  TensorElement t = e;
  std::size_t pos = 0;
  for (const LinearMap* m : maps) {
    if (m) {
      t = apply_on_leg(*m, t, pos);
      pos += m->target_degree();
    } else {
      ++pos;
    }
  }
  return t;
}

LinearMap left_multiplication(const TensorElement& a, const LinearMap& mult) {
  const FieldSpec f = a.field();
  return LinearMap::from_function(f, a.shape(), a.shape(), [&](Key k) {
    return leg_multiply(a, TensorElement::from_entries(f, a.shape(), {{k, f.one()}}), mult);
  });
}

TensorElement invert_element(const TensorElement& a, const LinearMap& mult, const TensorElement& unit) {
  if (unit.degree() != 1) throw DimensionMismatch("invert_element: unit must have degree 1");
  const TensorElement one = unit_power(unit, a.degree());
  if (a.is_zero()) throw NotInvertible("the zero element is not invertible");
  DenseMatrix l = DenseMatrix::from_map(left_multiplication(a.with_dual_mask(0), mult));
  DenseMatrix rhs(a.field(), l.rows(), 1);
  for (const auto& [k, c] : one.entries()) rhs.at(k, 0) = c;
  auto sol = solve(l, rhs);
  if (!sol) throw NotInvertible("left multiplication is singular");
  std::vector<TensorElement::Entry> entries;
  for (std::size_t r = 0; r < sol->rows(); ++r) {
    if (!sol->at(r, 0).is_zero()) entries.emplace_back(r, sol->at(r, 0));
  }
  TensorElement x = TensorElement::from_entries(a.field(), a.shape(), std::move(entries));
  if (leg_multiply(x, a.with_dual_mask(0), mult) != one || leg_multiply(a.with_dual_mask(0), x, mult) != one) {
    throw NotInvertible("element has only a one-sided inverse");
  }
  return x.with_dual_mask(a.dual_mask());
}

Scalar pair_dual(const TensorElement& phi, const TensorElement& h) {
  if (phi.degree() != 1 || h.degree() != 1) throw DimensionMismatch("pair_dual expects degree-1 elements");
  if (phi.shape() != h.shape()) throw DimensionMismatch("pair_dual: dimension mismatch");
  if (phi.field() != h.field()) throw FieldMismatch("pair_dual over different fields");
  Scalar s = phi.field().zero();
  for (const auto& [k, c] : phi.entries()) {
    Scalar v = h.coeff_key(k);
    if (!v.is_zero()) s += c * v;
  }
  return s;
}

TensorElement diagonal(FieldSpec field, std::uint32_t dim) {
  std::vector<TensorElement::Entry> e;
  for (std::uint32_t i = 0; i < dim; ++i) e.emplace_back(Key(i) * dim + i, field.one());
  return TensorElement::from_entries(field, {dim, dim}, std::move(e));
}

LinearMap map_from_graph(const TensorElement& g, Shape source, Shape target) {
  const std::uint64_t ns = shape_size(source), nt = shape_size(target);
  if (shape_size(g.shape()) != ns * nt) throw DimensionMismatch("map_from_graph: graph size mismatch");
  std::vector<std::vector<TensorElement::Entry>> cols(ns);
  for (const auto& [k, c] : g.entries()) cols[k / nt].emplace_back(k % nt, c);
  std::vector<TensorElement> out;
  out.reserve(ns);
  for (auto& c : cols) out.push_back(TensorElement::from_entries(g.field(), target, std::move(c)));
  return LinearMap(g.field(), std::move(source), std::move(target), std::move(out));
}

LinearMap flatten(const LinearMap& m) {
  const Shape t{static_cast<std::uint32_t>(shape_size(m.target()))};
  std::vector<TensorElement> cols;
  cols.reserve(m.columns().size());
  for (const auto& c : m.columns()) cols.push_back(c.reshaped(t));
  return LinearMap(m.field(), {static_cast<std::uint32_t>(shape_size(m.source()))}, t, std::move(cols));
}

}  // namespace qhopf
