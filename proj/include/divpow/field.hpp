// Exact scalar arithmetic over prime fields and the rationals.
#ifndef DIVPOW_FIELD_HPP
#define DIVPOW_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace divpow {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Identifies the coefficient field of a computation: characteristic 0
/// means the rationals, otherwise a prime p and the field F_p.
/// Every Scalar carries its FieldSpec, and all scalars entering one
/// operation must agree.
struct FieldSpec {
  std::int64_t characteristic = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::int64_t p);

  bool is_prime_field() const { return characteristic != 0; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::int64_t n);

/// An exact field element. Prime-field values are kept as canonical
/// residues in [0, p); rational values are kept in lowest terms with
/// positive denominator (cpp_rational canonicalizes on every operation).
class Scalar {
 public:
  Scalar() : spec_(FieldSpec::rationals()) {}

  static Scalar zero(FieldSpec spec) { return Scalar(spec); }
  static Scalar one(FieldSpec spec) { return of(spec, 1); }
  static Scalar of(FieldSpec spec, std::int64_t v);
  static Scalar of(FieldSpec spec, const BigInt& v);
  static Scalar rational(const BigInt& num, const BigInt& den);

  FieldSpec spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical residue; only defined over a prime field.
  std::int64_t residue() const;
  /// Reduced fraction; only defined over the rationals.
  const BigRat& rational_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;  // e >= 0

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  explicit Scalar(FieldSpec spec) : spec_(spec) {}

  FieldSpec spec_;
  std::int64_t res_ = 0;  // prime-field residue
  BigRat rat_;            // rational value (char 0 only)
};

/// Residue of v mod p in [0, p).
std::int64_t mod_reduce(std::int64_t v, std::int64_t p);
/// Inverse of a mod p; a must be nonzero mod p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

}  // namespace divpow

#endif
