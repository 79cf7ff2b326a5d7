#include "divpow/field.hpp"

#include <stdexcept>

namespace divpow {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("FieldSpec: characteristic must be 0 or a prime");
  return FieldSpec{p};
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) throw std::domain_error("mod_inverse of zero");
  // extended Euclid
  std::int64_t old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod_reduce(old_s, p);
}

Scalar Scalar::of(FieldSpec spec, std::int64_t v) {
  Scalar s(spec);
  if (spec.is_prime_field())
    s.res_ = mod_reduce(v, spec.characteristic);
  else
    s.rat_ = v;
  return s;
}

Scalar Scalar::of(FieldSpec spec, const BigInt& v) {
  Scalar s(spec);
  if (spec.is_prime_field()) {
    BigInt r = v % spec.characteristic;
    if (r < 0) r += spec.characteristic;
    s.res_ = static_cast<std::int64_t>(r);
  } else {
    s.rat_ = v;
  }
  return s;
}

Scalar Scalar::rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  Scalar s(FieldSpec::rationals());
  s.rat_ = den < 0 ? BigRat(-num, -den) : BigRat(num, den);
  return s;
}

bool Scalar::is_zero() const {
  return spec_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
  return spec_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

std::int64_t Scalar::residue() const {
  if (!spec_.is_prime_field()) throw std::logic_error("residue() on a rational scalar");
  return res_;
}

const BigRat& Scalar::rational_value() const {
  if (spec_.is_prime_field()) throw std::logic_error("rational_value() on a prime-field scalar");
  return rat_;
}

namespace {
void check_same(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw std::invalid_argument("Scalar: mixed field specs");
}
}  // namespace

Scalar Scalar::operator-() const {
  Scalar s(spec_);
  if (spec_.is_prime_field())
    s.res_ = res_ == 0 ? 0 : spec_.characteristic - res_;
  else
    s.rat_ = -rat_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(spec_, o.spec_);
  Scalar s(spec_);
  if (spec_.is_prime_field())
    s.res_ = mod_reduce(res_ + o.res_, spec_.characteristic);
  else
    s.rat_ = rat_ + o.rat_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(spec_, o.spec_);
  Scalar s(spec_);
  if (spec_.is_prime_field())
    s.res_ = mod_reduce(res_ * o.res_, spec_.characteristic);
  else
    s.rat_ = rat_ * o.rat_;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  Scalar s(spec_);
  if (spec_.is_prime_field())
    s.res_ = mod_inverse(res_, spec_.characteristic);
  else
    s.rat_ = 1 / rat_;
  return s;
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("Scalar::pow: negative exponent");
  Scalar acc = Scalar::one(spec_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(spec_ == o.spec_)) return false;
  return spec_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
}

std::string Scalar::str() const {
  if (spec_.is_prime_field()) return std::to_string(res_);
  return rat_.str();
}

}  // namespace divpow
