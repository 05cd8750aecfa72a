#include <doctest.h>

#include "qhopf/errors.hpp"
#include "qhopf/leg_expr.hpp"
#include "qhopf/linalg.hpp"
#include "qhopf/tensor_ops.hpp"

using namespace qhopf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long long a, long long b = 1) { return Q.from_ratio(a, b); }

Scalar at(const TensorElement& t, std::vector<std::uint32_t> idx) { return t.coeff(idx); }

}  // namespace

TEST_CASE("tensor entries are canonical") {
  TensorElement t = TensorElement::from_entries(Q, {2, 3}, {{5, q(1)}, {0, q(2)}, {5, q(-1)}, {3, q(0)}});
  REQUIRE(t.size() == 1);
  CHECK(t.entries()[0].first == 0);
  CHECK(at(t, {0, 0}) == q(2));
  const std::uint32_t idx[] = {1, 2};
  CHECK(t.encode(idx) == 5);
  CHECK((t - t).is_zero());
}

TEST_CASE("first leg is the most significant digit") {
  const TensorElement t = TensorElement::basis(Q, {2, 3, 4}, {1, 2, 3});
  CHECK(t.entries()[0].first == (1 * 3 + 2) * 4 + 3);
  std::uint32_t out[3];
  t.decode(t.entries()[0].first, out);
  CHECK(out[0] == 1);
  CHECK(out[1] == 2);
  CHECK(out[2] == 3);
}

TEST_CASE("permute_legs reorders slots") {
  const TensorElement t = TensorElement::basis(Q, {2, 3, 4}, {1, 2, 3});
  const std::size_t perm[] = {2, 0, 1};
  const TensorElement p = permute_legs(t, perm);
  CHECK(p.shape() == Shape{4, 2, 3});
  CHECK(at(p, {3, 1, 2}) == q(1));
}

TEST_CASE("outer products and shapes") {
  const TensorElement a = TensorElement::basis(Q, {2}, {1});
  const TensorElement b = TensorElement::basis(Q, {3}, {2});
  const TensorElement ab = outer(a, b);
  CHECK(ab.shape() == Shape{2, 3});
  CHECK(at(ab, {1, 2}) == q(1));
  CHECK_THROWS_AS(a + b, DimensionMismatch);
}

TEST_CASE("linear maps compose and tensor") {
  // swap on k²
  const LinearMap s(Q, {2}, {2}, {TensorElement::basis(Q, {2}, {1}), TensorElement::basis(Q, {2}, {0})});
  CHECK(s.after(s) == LinearMap::identity(Q, {2}));
  const LinearMap ss = s.tensor(s);
  CHECK(ss.apply(TensorElement::basis(Q, {2, 2}, {0, 1})) == TensorElement::basis(Q, {2, 2}, {1, 0}));
  CHECK(flatten(ss).source() == Shape{4});
}

TEST_CASE("leg expressions follow their names") {
  // mult on k² = k[Z2]
  const LinearMap m = LinearMap::from_function(Q, {2, 2}, {2}, [](Key k) {
    return TensorElement::basis(Q, {2}, {static_cast<std::uint32_t>((k / 2 + k % 2) % 2)});
  });
  LegExpr e = LegExpr(diagonal(Q, 2), {"t", "a"}) * LegExpr(diagonal(Q, 2), {"u", "b"});
  e.merge(m, "c", {"a", "b"});
  const TensorElement g = e.take({"t", "u", "c"});
  CHECK(at(g, {1, 1, 0}) == q(1));
  CHECK(at(g, {1, 0, 1}) == q(1));
  CHECK(map_from_graph(g, {2, 2}, {2}) == m);
  LegExpr f = LegExpr(diagonal(Q, 2), {"t", "a"});
  f.rename("a", "z");
  CHECK(f.take({"z", "t"}) == diagonal(Q, 2));
  CHECK_THROWS(f.take({"t"}));
}

TEST_CASE("exact elimination") {
  DenseMatrix a(Q, 3, 3);
  const long long v[3][3] = {{2, 1, 1}, {1, 3, 2}, {1, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = q(v[i][j]);
  auto inv = inverse(a);
  REQUIRE(inv);
  const DenseMatrix p = multiply(a, *inv);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(p.at(i, j) == q(i == j ? 1 : 0));
  // determinant -1: entries of the inverse are integers
  CHECK(inv->at(0, 0) == q(0));
  a.at(2, 0) = q(3);
  a.at(2, 1) = q(4);
  a.at(2, 2) = q(3);  // row 3 = row 1 + row 2
  CHECK(rank(a) == 2);
  CHECK_FALSE(inverse(a));
}

TEST_CASE("elimination over a prime field") {
  const FieldSpec F5 = FieldSpec::prime(5);
  DenseMatrix a(F5, 2, 2);
  a.at(0, 0) = F5.from_int(1);
  a.at(0, 1) = F5.from_int(2);
  a.at(1, 0) = F5.from_int(3);
  a.at(1, 1) = F5.from_int(1);  // det = 1 - 6 = 0 mod 5
  CHECK(rank(a) == 1);
  a.at(1, 1) = F5.from_int(2);
  CHECK(rank(a) == 2);
}

TEST_CASE("element inversion in a tensor power") {
  const LinearMap m = LinearMap::from_function(Q, {2, 2}, {2}, [](Key k) {
    return TensorElement::basis(Q, {2}, {static_cast<std::uint32_t>((k / 2 + k % 2) % 2)});
  });
  const TensorElement one = TensorElement::basis(Q, {2}, {0});
  // (1 + 2g)⁻¹ = (-1 + 2g)/3 in k[Z2]
  const TensorElement a = TensorElement::from_entries(Q, {2}, {{0, q(1)}, {1, q(2)}});
  const TensorElement inv = invert_element(a, m, one);
  CHECK(inv == TensorElement::from_entries(Q, {2}, {{0, q(-1, 3)}, {1, q(2, 3)}}));
  const TensorElement z = TensorElement::from_entries(Q, {2}, {{0, q(1)}, {1, q(1)}});
  CHECK_THROWS_AS(invert_element(z, m, one), NotInvertible);
}
