#include <doctest.h>

#include "qhopf/instances.hpp"
#include "qhopf/quasitriangular.hpp"
#include "qhopf/tensor_ops.hpp"

using namespace qhopf;

TEST_CASE("R-matrices of the bundled instances certify") {
  for (const auto& i : bundled_instances()) {
    if (!i.r_matrix) continue;
    CAPTURE(i.name);
    const QTCertificate c = validate_r_matrix(i.algebra, *i.r_matrix);
    CHECK(c.certified());
    REQUIRE(c.u);
    REQUIRE(c.u_inv);
    CHECK(i.algebra.mul(*c.u, *c.u_inv) == i.algebra.unit);
    CHECK(i.algebra.mul(*c.u_inv, *c.u) == i.algebra.unit);
    CHECK(i.algebra.eps(*c.u).is_one());
    CHECK(c.holds("r_antipode_twist"));
  }
}

TEST_CASE("S² is conjugation by u") {
  for (const auto& i : bundled_instances()) {
    if (!i.r_matrix) continue;
    CAPTURE(i.name);
    const QuasiHopfAlgebra& h = i.algebra;
    const QTCertificate c = validate_r_matrix(h, *i.r_matrix);
    const LinearMap s2 = h.antipode.after(h.antipode);
    for (std::uint32_t k = 0; k < h.dim; ++k) {
      CHECK(s2.column(k) == h.mul(h.mul(*c.u, h.basis(k)), *c.u_inv));
    }
  }
}

TEST_CASE("frozen u elements") {
  // Sweedler: u = g; semion: u = δ_e + r(g,g)δ_g with u⁻¹ = δ_e + 3δ_g over F5
  const NamedInstance sw = bundled_instance("sweedler");
  CHECK(*validate_r_matrix(sw.algebra, *sw.r_matrix).u == sw.algebra.basis(1));
  const NamedInstance se = bundled_instance("semion");
  const FieldSpec F5 = FieldSpec::prime(5);
  const QTCertificate c = validate_r_matrix(se.algebra, *se.r_matrix);
  CHECK(*c.u == TensorElement::from_entries(F5, {2}, {{0, F5.one()}, {1, F5.from_int(2)}}));
  CHECK(*c.u_inv == TensorElement::from_entries(F5, {2}, {{0, F5.one()}, {1, F5.from_int(3)}}));
}

TEST_CASE("Sweedler's R₀ is triangular") {
  const NamedInstance sw = bundled_instance("sweedler");
  const QuasiHopfAlgebra& h = sw.algebra;
  CHECK(h.mul(*sw.r_matrix, flip(*sw.r_matrix)) == h.one(2));
}

TEST_CASE("non-R-matrices are rejected") {
  const QuasiHopfAlgebra sw = bundled_instance("sweedler").algebra;
  CHECK_FALSE(validate_r_matrix(sw, sw.one(2)).certified());
  // ω(g,g,g) = -1 has no R of diagonal form with r(g,g)² = 1
  const NamedInstance se = bundled_instance("semion");
  CHECK_FALSE(validate_r_matrix(se.algebra, se.algebra.one(2)).certified());
  const QuasiHopfAlgebra k2 = bundled_instance("kZ2").algebra;
  CHECK_FALSE(validate_r_matrix(k2, outer(k2.unit, k2.basis(1))).certified());
}
