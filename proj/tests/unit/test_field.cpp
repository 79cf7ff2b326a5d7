#include <doctest.h>

#include "divpow/field.hpp"
#include "divpow/rng.hpp"

using namespace divpow;

TEST_CASE("field spec validation") {
  CHECK(FieldSpec::prime(2).characteristic == 2);
  CHECK(FieldSpec::prime(97).characteristic == 97);
  CHECK_THROWS_AS(FieldSpec::prime(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(6), std::invalid_argument);
  CHECK(!FieldSpec::rationals().is_prime_field());
}

TEST_CASE("prime residues are canonical") {
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(Scalar::of(f5, 7).residue() == 2);
  CHECK(Scalar::of(f5, -1).residue() == 4);
  CHECK(Scalar::of(f5, BigInt("123456789012345678901234567890")).residue() ==
        static_cast<std::int64_t>(BigInt("123456789012345678901234567890") % 5));
  CHECK((Scalar::of(f5, 2) + Scalar::of(f5, 4)).residue() == 1);
  CHECK((-Scalar::of(f5, 2)).residue() == 3);
}

TEST_CASE("rationals stay in lowest terms") {
  Scalar q = Scalar::rational(4, -6);
  CHECK(q.str() == "-2/3");
  CHECK((q * Scalar::rational(-3, 2)).is_one());
  CHECK_THROWS_AS(Scalar::rational(1, 0), std::domain_error);
}

TEST_CASE("field axioms on random samples") {
  for (std::int64_t c : {std::int64_t{0}, std::int64_t{2}, std::int64_t{3}, std::int64_t{5}}) {
    FieldSpec spec = c == 0 ? FieldSpec::rationals() : FieldSpec::prime(c);
    Rng rng(2024 + static_cast<std::uint64_t>(c));
    for (int i = 0; i < 200; ++i) {
      Scalar a = rng.scalar(spec), b = rng.scalar(spec), d = rng.scalar(spec);
      CHECK((a + b) * d == a * d + b * d);
      CHECK((a * b) * d == a * (b * d));
      CHECK(a + b == b + a);
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK(a / a == Scalar::one(spec));
      }
    }
  }
}

TEST_CASE("mixed specs are rejected") {
  Scalar a = Scalar::of(FieldSpec::prime(2), 1);
  Scalar b = Scalar::of(FieldSpec::prime(3), 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("powers") {
  FieldSpec f7 = FieldSpec::prime(7);
  CHECK(Scalar::of(f7, 3).pow(6).is_one());  // Fermat
  CHECK(Scalar::rational(2, 3).pow(3) == Scalar::rational(8, 27));
  CHECK(Scalar::of(f7, 0).pow(0).is_one());
  CHECK_THROWS_AS(Scalar::of(f7, 2).pow(-1), std::invalid_argument);
}
