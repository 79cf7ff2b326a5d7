#include <doctest.h>

#include "divpow/local_algebra.hpp"
#include "divpow/rng.hpp"

using namespace divpow;

namespace {
LocalElem elem(LocalAlgebra::Ptr alg, std::vector<std::int64_t> coords) {
  std::vector<Scalar> c;
  for (std::int64_t v : coords) c.push_back(Scalar::of(alg->base(), v));
  return LocalElem(alg, std::move(c));
}
}  // namespace

TEST_CASE("dual numbers") {
  auto d2 = make_dual_numbers(FieldSpec::prime(2));
  LocalElem eps = LocalElem::basis(d2, 1);
  CHECK(local_mul(eps, eps).is_zero());

  auto dq = make_dual_numbers(FieldSpec::rationals());
  LocalElem one_plus = elem(dq, {1, 1});
  LocalElem one_minus = elem(dq, {1, -1});
  CHECK(local_mul(one_plus, one_minus) == LocalElem::one(dq));

  auto d5 = make_dual_numbers(FieldSpec::prime(5));
  CHECK(residue(elem(d5, {3, 2})).residue() == 3);
}

TEST_CASE("local products") {
  auto dq = make_dual_numbers(FieldSpec::rationals());
  CHECK(local_mul(elem(dq, {2, 1}), elem(dq, {3, 1})) == elem(dq, {6, 5}));

  auto t3 = truncated_poly_algebra(FieldSpec::prime(2), 3);
  LocalElem t = LocalElem::basis(t3, 1);
  CHECK(local_mul(t, t) == LocalElem::basis(t3, 2));
  CHECK(local_mul(local_mul(t, t), t).is_zero());

  auto d3 = make_dual_numbers(FieldSpec::prime(3));
  CHECK_THROWS_AS(local_mul(LocalElem::one(d3), LocalElem::one(t3)), std::invalid_argument);
}

TEST_CASE("truncated algebra boundary cases") {
  auto k1 = truncated_poly_algebra(FieldSpec::prime(3), 1);
  CHECK(k1->dim() == 1);
  CHECK(local_mul(LocalElem::one(k1), LocalElem::one(k1)) == LocalElem::one(k1));
  CHECK_THROWS_AS(truncated_poly_algebra(FieldSpec::prime(3), 0), std::invalid_argument);

  auto k2 = truncated_poly_algebra(FieldSpec::prime(2), 2);
  auto dual = make_dual_numbers(FieldSpec::prime(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) CHECK(k2->structure(i, j, k) == dual->structure(i, j, k));
}

TEST_CASE("maximal ideal elements are nilpotent") {
  Rng rng(51);
  for (int k : {2, 3, 4}) {
    auto alg = truncated_poly_algebra(FieldSpec::prime(3), k);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Scalar> coords(static_cast<std::size_t>(k), Scalar::zero(alg->base()));
      for (int i : alg->maximal_ideal())
        coords[static_cast<std::size_t>(i)] = rng.scalar(alg->base());
      LocalElem x(alg, coords);
      LocalElem acc = LocalElem::one(alg);
      for (int e = 0; e < k; ++e) acc = local_mul(acc, x);
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("invalid structure tables are rejected") {
  FieldSpec f2 = FieldSpec::prime(2);
  // 2-dimensional table with e*e = e is not nilpotent on the ideal
  std::vector<Scalar> table(8, Scalar::zero(f2));
  auto set = [&](int i, int j, int k) { table[static_cast<std::size_t>((i * 2 + j) * 2 + k)] = Scalar::one(f2); };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 0, 1);
  set(1, 1, 1);  // e^2 = e
  std::vector<Scalar> rho{Scalar::one(f2), Scalar::zero(f2)};
  CHECK_THROWS_AS(LocalAlgebra::create(f2, {"1", "e"}, table, {1}, rho), std::invalid_argument);
}

TEST_CASE("lifting checks over the dual numbers") {
  FieldSpec f2 = FieldSpec::prime(2);
  auto dual = make_dual_numbers(f2);

  LocalMatrix unit(dual, 1, 1);
  unit.at(0, 0) = elem(dual, {1, 1});  // 1 + e
  NakayamaReport s = nakayama_verify(unit, NakayamaMode::surjective);
  CHECK(s.precondition_holds);
  CHECK(s.pass);

  LocalMatrix eps(dual, 1, 1);
  eps.at(0, 0) = elem(dual, {0, 1});
  NakayamaReport fail = nakayama_verify(eps, NakayamaMode::surjective);
  CHECK(!fail.precondition_holds);
  CHECK(fail.reason == "residue not surjective");
  CHECK(!fail.pass);
}

TEST_CASE("lifting checks over the truncated cubic") {
  FieldSpec f2 = FieldSpec::prime(2);
  auto t3 = truncated_poly_algebra(f2, 3);
  Rng rng(1234);
  int verified = 0;
  while (verified < 10) {
    LocalMatrix phi(t3, 2, 2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        phi.at(r, c) = elem(t3, {rng.below(2), rng.below(2), rng.below(2)});
    if (rank(phi.residue_matrix()) != 2) continue;
    ++verified;
    CHECK(nakayama_verify(phi, NakayamaMode::surjective).pass);
    CHECK(nakayama_verify(phi, NakayamaMode::injective).pass);
  }
}

TEST_CASE("lifting check is unsupported over an infinite field") {
  auto dq = make_dual_numbers(FieldSpec::rationals());
  LocalMatrix phi(dq, 1, 1);
  phi.at(0, 0) = LocalElem::one(dq);
  NakayamaReport rep = nakayama_verify(phi, NakayamaMode::surjective);
  CHECK(!rep.supported);
  CHECK(rep.reason == "enumeration requires a finite base field");
}

TEST_CASE("rectangular lifting checks") {
  FieldSpec f2 = FieldSpec::prime(2);
  auto dual = make_dual_numbers(f2);
  // 1x2: surjective but never injective
  LocalMatrix wide(dual, 1, 2);
  wide.at(0, 0) = LocalElem::one(dual);
  wide.at(0, 1) = LocalElem::basis(dual, 1);
  CHECK(nakayama_verify(wide, NakayamaMode::surjective).pass);
  CHECK(!nakayama_verify(wide, NakayamaMode::injective).precondition_holds);
  // 2x1: injective but not surjective
  LocalMatrix tall(dual, 2, 1);
  tall.at(0, 0) = LocalElem::one(dual);
  tall.at(1, 0) = LocalElem::basis(dual, 1);
  CHECK(nakayama_verify(tall, NakayamaMode::injective).pass);
  CHECK(!nakayama_verify(tall, NakayamaMode::surjective).precondition_holds);
}
