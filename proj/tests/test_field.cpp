#include <doctest.h>

#include "qhopf/errors.hpp"
#include "qhopf/field.hpp"

using namespace qhopf;

TEST_CASE("rationals stay in lowest terms") {
  const FieldSpec Q = FieldSpec::rationals();
  const Scalar a = Q.from_ratio(6, -4);
  CHECK(a.to_string() == "-3/2");
  CHECK((a + Q.from_ratio(3, 2)).is_zero());
  CHECK((a * a.inverse()).is_one());
  CHECK(Q.parse("10/4") == Q.from_ratio(5, 2));
  CHECK(Q.parse("-7").to_string() == "-7");
}

TEST_CASE("large rationals are exact") {
  const FieldSpec Q = FieldSpec::rationals();
  Scalar x = Q.one();
  for (int i = 0; i < 200; ++i) x *= Q.from_ratio(3, 2);
  for (int i = 0; i < 200; ++i) x /= Q.from_ratio(3, 2);
  CHECK(x.is_one());
}

TEST_CASE("prime field arithmetic") {
  const FieldSpec F7 = FieldSpec::prime(7);
  CHECK(F7.from_int(-1).to_string() == "6");
  CHECK(F7.from_int(3).inverse() == F7.from_int(5));
  CHECK(F7.from_ratio(1, 2) == F7.from_int(4));
  // 2 is a primitive cube root of unity mod 7
  const Scalar z = F7.from_int(2);
  CHECK((z * z * z).is_one());
  CHECK_FALSE(z.is_one());
  CHECK(F7.parse("6") == F7.from_int(-1));
  CHECK_THROWS_AS(F7.parse("13"), ParseError);
}

TEST_CASE("field names round-trip") {
  CHECK(FieldSpec::from_name("Q").is_rational());
  CHECK(FieldSpec::from_name("F5") == FieldSpec::prime(5));
  CHECK(FieldSpec::prime(5).name() == "F5");
}

TEST_CASE("bad fields and mixed arithmetic are rejected") {
  CHECK_THROWS_AS(FieldSpec::prime(9), BadCharacteristic);
  CHECK_THROWS_AS(FieldSpec::rationals().zero().inverse(), Error);
  const Scalar a = FieldSpec::prime(5).one();
  const Scalar b = FieldSpec::prime(7).one();
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS(FieldSpec::rationals().parse("1/0"));
  CHECK_THROWS(FieldSpec::rationals().parse("x"));
}
