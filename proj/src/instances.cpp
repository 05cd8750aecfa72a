#include "qhopf/instances.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/quasitriangular.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

namespace {

TensorElement vec(FieldSpec f, std::uint32_t n, std::vector<TensorElement::Entry> e) {
  return TensorElement::from_entries(f, {n}, std::move(e));
}

}  // namespace

Group cyclic_group(std::uint32_t n) {
  Group g;
  g.order = n;
  g.table.resize(n * n);
  g.inverse.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
    g.inverse[a] = (n - a) % n;
    g.labels.push_back(a == 0 ? "e" : (n == 2 ? std::string("g") : "g" + std::to_string(a)));
  }
  return g;
}

Group direct_product(const Group& a, const Group& b) {
  Group g;
  g.order = a.order * b.order;
  g.table.resize(g.order * g.order);
  g.inverse.resize(g.order);
  auto idx = [&](std::uint32_t i, std::uint32_t j) { return i * b.order + j; };
  for (std::uint32_t i = 0; i < a.order; ++i) {
    for (std::uint32_t j = 0; j < b.order; ++j) {
      for (std::uint32_t k = 0; k < a.order; ++k) {
        for (std::uint32_t l = 0; l < b.order; ++l) g.table[idx(i, j) * g.order + idx(k, l)] = idx(a.mul(i, k), b.mul(j, l));
      }
      g.inverse[idx(i, j)] = idx(a.inverse[i], b.inverse[j]);
      g.labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
    }
  }
  g.identity = idx(a.identity, b.identity);
  return g;
}

void validate_group(const Group& g) {
  const std::uint32_t n = g.order;
  if (g.table.size() != n * n || g.inverse.size() != n || g.identity >= n) {
    throw ValidationFailed("group_table", "table sizes do not match the order");
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a) {
      throw ValidationFailed("group_identity", witness_string({a}));
    }
    if (g.mul(a, g.inverse[a]) != g.identity || g.mul(g.inverse[a], a) != g.identity) {
      throw ValidationFailed("group_inverse", witness_string({a}));
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw ValidationFailed("group_associativity", witness_string({a, b, c}));
      }
    }
  }
}

ThreeCocycle trivial_cocycle(const Group& g, FieldSpec field) {
  return ThreeCocycle{field, g.order, std::vector<Scalar>(std::size_t(g.order) * g.order * g.order, field.one())};
}

ThreeCocycle cyclic_cocycle(const Group& zn, const Scalar& zeta) {
  const std::uint32_t n = zn.order;
  ThreeCocycle w = trivial_cocycle(zn, zeta.field());
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        Scalar v = zeta.field().one();
        if (b + c >= n) {
          for (std::uint32_t k = 0; k < a; ++k) v *= zeta;
        }
        w.values[(a * n + b) * n + c] = v;
      }
    }
  }
  return w;
}

ThreeCocycle product_cocycle(const Group& a, const ThreeCocycle& wa, const Group& b, const ThreeCocycle& wb) {
  const std::uint32_t n = a.order * b.order;
  ThreeCocycle w{wa.field, n, {}};
  w.values.reserve(std::size_t(n) * n * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      for (std::uint32_t z = 0; z < n; ++z) {
        w.values.push_back(wa(x / b.order, y / b.order, z / b.order) * wb(x % b.order, y % b.order, z % b.order));
      }
    }
  }
  return w;
}

std::vector<std::uint32_t> cocycle_defect(const Group& g, const ThreeCocycle& w) {
  const std::uint32_t n = g.order, e = g.identity;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (w(a, b, c).is_zero()) return {a, b, c};
        if ((a == e || b == e || c == e) && !w(a, b, c).is_one()) return {a, b, c};
        for (std::uint32_t d = 0; d < n; ++d) {
          if (w(b, c, d) * w(a, g.mul(b, c), d) * w(a, b, c) != w(g.mul(a, b), c, d) * w(a, b, g.mul(c, d))) {
            return {a, b, c, d};
          }
        }
      }
    }
  }
  return {};
}

QuasiHopfAlgebra group_algebra(const Group& g, FieldSpec f) {
  validate_group(g);
  const std::uint32_t n = g.order;
  const Scalar one = f.one();
  auto mult = LinearMap::from_function(f, {n, n}, {n}, [&](Key k) {
    return vec(f, n, {{g.mul(static_cast<std::uint32_t>(k / n), static_cast<std::uint32_t>(k % n)), one}});
  });
  auto comult = LinearMap::from_function(f, {n}, {n, n}, [&](Key k) {
    return TensorElement::from_entries(f, {n, n}, {{k * n + k, one}});
  });
  auto counit = LinearMap::from_function(f, {n}, {}, [&](Key) { return TensorElement::scalar(one); });
  auto s = LinearMap::from_function(f, {n}, {n}, [&](Key k) { return vec(f, n, {{g.inverse[k], one}}); });
  const TensorElement unit = vec(f, n, {{g.identity, one}});
  const TensorElement phi = unit_power(unit, 3);
  return make_quasi_hopf(f, g.labels, mult, unit, comult, counit, phi, phi, s, unit, unit);
}

QuasiHopfAlgebra function_algebra_unchecked(const Group& g, const ThreeCocycle& w) {
  validate_group(g);
  const FieldSpec f = w.field;
  const std::uint32_t n = g.order;
  const Scalar one = f.one();
  std::vector<std::string> labels;
  for (const auto& l : g.labels) labels.push_back("d_" + l);
  auto mult = LinearMap::from_function(f, {n, n}, {n}, [&](Key k) {
    if (k / n != k % n) return TensorElement(f, {n});
    return vec(f, n, {{k / n, one}});
  });
  auto comult = LinearMap::from_function(f, {n}, {n, n}, [&](Key k) {
    std::vector<TensorElement::Entry> e;
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (g.mul(x, y) == k) e.emplace_back(Key(x) * n + y, one);
      }
    }
    return TensorElement::from_entries(f, {n, n}, std::move(e));
  });
  auto counit = LinearMap::from_function(f, {n}, {}, [&](Key k) {
    return k == g.identity ? TensorElement::scalar(one) : TensorElement(f, {});
  });
  auto s = LinearMap::from_function(f, {n}, {n}, [&](Key k) { return vec(f, n, {{g.inverse[k], one}}); });
  std::vector<TensorElement::Entry> u, phi, phi_inv, beta;
  for (std::uint32_t x = 0; x < n; ++x) {
    u.emplace_back(x, one);
    beta.emplace_back(x, w(x, g.inverse[x], x));
    for (std::uint32_t y = 0; y < n; ++y) {
      for (std::uint32_t z = 0; z < n; ++z) {
        const Key k = (Key(x) * n + y) * n + z;
        phi.emplace_back(k, w(x, y, z).inverse());
        phi_inv.emplace_back(k, w(x, y, z));
      }
    }
  }
  const TensorElement unit = vec(f, n, std::move(u));
  return make_quasi_hopf(f, labels, mult, unit, comult, counit,
                         TensorElement::from_entries(f, {n, n, n}, std::move(phi)),
                         TensorElement::from_entries(f, {n, n, n}, std::move(phi_inv)), s, unit,
                         vec(f, n, std::move(beta)));
}

QuasiHopfAlgebra function_algebra(const Group& g, const ThreeCocycle& w) {
  auto defect = cocycle_defect(g, w);
  if (!defect.empty()) throw CocycleInvalid("omega is not a normalized 3-cocycle at " + witness_string(defect));
  return function_algebra_unchecked(g, w);
}

QuasiHopfAlgebra sweedler_hopf(FieldSpec f) {
  if (f.characteristic() == 2) throw BadCharacteristic("Sweedler's algebra needs characteristic != 2");
  // index = a + 2b for g^a x^b
  const Scalar one = f.one(), neg = -f.one();
  auto mult = LinearMap::from_function(f, {4, 4}, {4}, [&](Key k) {
    const std::uint32_t i = static_cast<std::uint32_t>(k / 4), j = static_cast<std::uint32_t>(k % 4);
    const std::uint32_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
    if (b + d >= 2) return TensorElement(f, {4});
    return vec(f, 4, {{(a + c) % 2 + 2 * (b + d), (b * c) % 2 ? neg : one}});
  });
  auto t2 = [&](std::vector<TensorElement::Entry> e) { return TensorElement::from_entries(f, {4, 4}, std::move(e)); };
  auto comult = LinearMap(f, {4}, {4, 4},
                          {t2({{0, one}}), t2({{5, one}}), t2({{2 * 4 + 0, one}, {1 * 4 + 2, one}}),
                           t2({{3 * 4 + 1, one}, {0 * 4 + 3, one}})});
  auto counit = LinearMap(f, {4}, {},
                          {TensorElement::scalar(one), TensorElement::scalar(one), TensorElement(f, {}), TensorElement(f, {})});
  auto s = LinearMap(f, {4}, {4}, {vec(f, 4, {{0, one}}), vec(f, 4, {{1, one}}), vec(f, 4, {{3, neg}}), vec(f, 4, {{2, one}})});
  const TensorElement unit = vec(f, 4, {{0, one}});
  const TensorElement phi = unit_power(unit, 3);
  return make_quasi_hopf(f, {"1", "g", "x", "gx"}, mult, unit, comult, counit, phi, phi, s, unit, unit);
}

TensorElement sweedler_r0(const QuasiHopfAlgebra& h) {
  const FieldSpec f = h.field;
  const Scalar half = f.from_ratio(1, 2);
  return TensorElement::from_entries(f, {4, 4}, {{0, half}, {1, half}, {4, half}, {5, -half}});
}

TensorElement function_algebra_r(const QuasiHopfAlgebra& h, const std::vector<Scalar>& r) {
  const std::uint32_t n = h.dim;
  std::vector<TensorElement::Entry> e;
  for (std::uint32_t k = 0; k < n * n; ++k) e.emplace_back(k, r[k]);
  return TensorElement::from_entries(h.field, {n, n}, std::move(e));
}

namespace {

NamedInstance checked(std::string name, std::string description, QuasiHopfAlgebra h,
                      std::optional<TensorElement> r = std::nullopt) {
  require_valid(validate_all(h));
  if (r) require_valid(validate_r_matrix(h, *r).report);
  return {std::move(name), std::move(description), std::move(h), std::move(r)};
}

}  // namespace

std::vector<NamedInstance> bundled_instances() {
  const FieldSpec Q = FieldSpec::rationals(), F5 = FieldSpec::prime(5), F7 = FieldSpec::prime(7);
  const Group z2 = cyclic_group(2), z3 = cyclic_group(3), v4 = direct_product(z2, z2);
  std::vector<NamedInstance> out;
  QuasiHopfAlgebra kz2 = group_algebra(z2, Q);
  TensorElement one2 = kz2.one(2);
  out.push_back(checked("kZ2", "group algebra of Z2 over Q", std::move(kz2), one2));
  QuasiHopfAlgebra kz3 = group_algebra(z3, F7);
  one2 = kz3.one(2);
  out.push_back(checked("kZ3", "group algebra of Z3 over F7", std::move(kz3), one2));
  QuasiHopfAlgebra kv4 = group_algebra(v4, Q);
  one2 = kv4.one(2);
  out.push_back(checked("kZ2xZ2", "group algebra of Z2xZ2 over Q", std::move(kv4), one2));
  QuasiHopfAlgebra fz2 = function_algebra(z2, trivial_cocycle(z2, Q));
  one2 = fz2.one(2);
  out.push_back(checked("fZ2", "function algebra on Z2, trivial cocycle", std::move(fz2), one2));
  out.push_back(checked("fZ2w", "function algebra on Z2 with w(g,g,g) = -1 over Q",
                        function_algebra(z2, cyclic_cocycle(z2, Q.from_int(-1)))));
  QuasiHopfAlgebra sw = sweedler_hopf(Q);
  TensorElement r0 = sweedler_r0(sw);
  out.push_back(checked("sweedler", "Sweedler's four-dimensional Hopf algebra over Q", std::move(sw), r0));
  QuasiHopfAlgebra sem = function_algebra(z2, cyclic_cocycle(z2, F5.from_int(-1)));
  TensorElement rs = function_algebra_r(sem, {F5.one(), F5.one(), F5.one(), F5.from_int(2)});
  out.push_back(checked("semion", "function algebra on Z2 with w(g,g,g) = -1 over F5, r(g,g) = 2", std::move(sem), rs));
  out.push_back(checked("fZ3w", "function algebra on Z3 with the cocycle of zeta = 2 over F7",
                        function_algebra(z3, cyclic_cocycle(z3, F7.from_int(2)))));
  const ThreeCocycle wm = cyclic_cocycle(z2, Q.from_int(-1));
  out.push_back(checked("fZ2xZ2w", "function algebra on Z2xZ2 with a product cocycle over Q",
                        function_algebra(v4, product_cocycle(z2, wm, z2, wm))));
  return out;
}

NamedInstance bundled_instance(const std::string& name) {
  for (auto& i : bundled_instances()) {
    if (i.name == name) return i;
  }
  throw Error("unknown instance '" + name + "'");
}

std::vector<std::string> bundled_names() {
  return {"kZ2", "kZ3", "kZ2xZ2", "fZ2", "fZ2w", "sweedler", "semion", "fZ3w", "fZ2xZ2w"};
}

std::vector<NegativeInstance> negative_instances() {
  const FieldSpec Q = FieldSpec::rationals();
  const Group z2 = cyclic_group(2);
  std::vector<NegativeInstance> out;
  const QuasiHopfAlgebra k = group_algebra(z2, Q);
  {
    // Φ = 2·1⊗1⊗1
    QuasiHopfAlgebra h = k;
    h.phi = Q.from_int(2) * k.one(3);
    h.phi_inv = Q.from_ratio(1, 2) * k.one(3);
    out.push_back({"bad_phi_normalization", "phi_normalization", std::move(h)});
  }
  {
    ThreeCocycle w = trivial_cocycle(z2, Q);
    w.values[7] = Q.from_int(2);
    out.push_back({"non_cocycle", "pentagon", function_algebra_unchecked(z2, w)});
  }
  {
    QuasiHopfAlgebra h = k;
    h.alpha = TensorElement(Q, {2});
    out.push_back({"alpha_zero", "antipode_reassociator", std::move(h)});
  }
  {
    // S(e) = S(g) = e
    QuasiHopfAlgebra h = k;
    h.antipode = LinearMap(Q, {2}, {2}, {k.unit, k.unit});
    h.antipode_inv.reset();
    out.push_back({"singular_antipode", "antipode_bijective", std::move(h)});
  }
  return out;
}

}  // namespace qhopf
