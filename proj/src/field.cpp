#include "qhopf/field.hpp"

#include <charconv>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

using u128 = unsigned __int128;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p && d < (1ULL << 32); ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t power_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e != 0) {
    if (e & 1) r = static_cast<std::uint64_t>(u128(r) * b % p);
    b = static_cast<std::uint64_t>(u128(b) * b % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_prime(p)) {
    throw BadCharacteristic("not a supported prime: " + std::to_string(p));
  }
  return FieldSpec(p);
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long long v) const {
  if (p_ == 0) return Scalar(mpq_class(static_cast<long>(v)));
  return Scalar::residue(v, p_);
}

Scalar FieldSpec::from_ratio(long long num, long long den) const {
  if (den == 0) throw NotInvertible("zero denominator");
  return from_int(num) / from_int(den);
}

Scalar FieldSpec::parse(std::string_view text) const {
  if (text.empty()) throw ParseError("scalar", "empty string");
  if (p_ == 0) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0) {
      throw ParseError("scalar", "not a rational: " + std::string(text));
    }
    if (sgn(q.get_den()) == 0) throw ParseError("scalar", "zero denominator");
    q.canonicalize();
    return Scalar(q);
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v >= p_) {
    throw ParseError("scalar", "not a residue mod " + std::to_string(p_) + ": " + std::string(text));
  }
  return Scalar::residue(static_cast<long long>(v), p_);
}

std::string FieldSpec::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

FieldSpec FieldSpec::from_name(std::string_view name) {
  if (name == "Q") return rationals();
  if (name.size() > 1 && name[0] == 'F') {
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), p);
    if (ec == std::errc() && ptr == name.data() + name.size()) return prime(p);
  }
  throw ParseError("field", "unknown field '" + std::string(name) + "'");
}

Scalar Scalar::residue(long long value, std::uint64_t p) {
  Scalar s;
  s.p_ = p;
  long long m = value % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  s.r_ = static_cast<std::uint64_t>(m);
  return s;
}

FieldSpec Scalar::field() const { return FieldSpec(p_); }

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw FieldMismatch("scalars from different fields");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ -= o.q_;
  } else {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ *= o.q_;
  } else {
    r_ = static_cast<std::uint64_t>(u128(r_) * o.r_ % p_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = p_ - r_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotInvertible("division by zero scalar");
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = power_mod(r_, p_ - 2, p_);
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(r_);
  return q_.get_str(10);
}

}  // namespace qhopf
