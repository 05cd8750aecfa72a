#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qhopf {

class Scalar;

/// The ground field: the rationals or a prime field F_p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws BadCharacteristic if p is not a prime below 2^62.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_ratio(long long num, long long den) const;
  /// Parses "n", "n/d" (rationals) or a residue in [0,p).
  Scalar parse(std::string_view text) const;

  /// "Q" or "F<p>".
  std::string name() const;
  static FieldSpec from_name(std::string_view name);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues in [0,p).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  static Scalar residue(long long value, std::uint64_t p);

  FieldSpec field() const;
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Decimal integer, "p/q", or residue.
  std::string to_string() const;

  const mpq_class& rational() const { return q_; }
  std::uint64_t residue_value() const { return r_; }

 private:
  void check_same(const Scalar& o) const;

  std::uint64_t p_ = 0;
  std::uint64_t r_ = 0;
  mpq_class q_;
};

}  // namespace qhopf
