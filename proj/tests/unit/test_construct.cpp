#include <doctest.h>

#include "divpow/construct.hpp"
#include "divpow/stab.hpp"

using namespace divpow;

namespace {
std::vector<Scalar> vec(FieldSpec spec, std::vector<std::int64_t> v) {
  std::vector<Scalar> out;
  for (std::int64_t x : v) out.push_back(Scalar::of(spec, x));
  return out;
}
}  // namespace

TEST_CASE("free tensor construction") {
  FieldSpec f2 = FieldSpec::prime(2);
  FreeTensor ft = build_free_tensor(3, f2, std::vector<std::int64_t>{2, 4, 8, 16});
  CHECK(ft.total_degree == 30);
  CHECK(!ft.x.is_zero());
  CHECK(composition_count(30, 3) == 496);

  // default exponents over characteristic 2 are the same powers of two
  FreeTensor def = build_free_tensor(3, f2);
  CHECK(def.exponents == std::vector<std::int64_t>{2, 4, 8, 16});
  CHECK(def.x == ft.x);

  FreeTensor ftq = build_free_tensor(3, FieldSpec::rationals(), std::vector<std::int64_t>{2, 4, 8, 16});
  CHECK(!ftq.x.is_zero());
  // every term present over F_2 is present over the rationals
  for (const auto& [c, t] : ft.x.terms()) {
    (void)t;
    CHECK(!ftq.x.coeff(c).is_zero());
  }

  CHECK_THROWS_AS(build_free_tensor(3, f2, std::vector<std::int64_t>{2, 3, 8, 16}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_free_tensor(2, f2), std::invalid_argument);
}

TEST_CASE("multiplication map ranks") {
  FieldSpec f2 = FieldSpec::prime(2);
  // d = 2, a = 1, b = 2, y = e2: injective
  MultiplicationMap mm = mult_map_matrix(vec(f2, {0, 1}), 1, 2);
  CHECK(mm.exponents_disjoint);
  CHECK(mm.full_rank);
  CHECK(mm.column_rank == 2);
  CHECK(mm.matrix.rows() == 4);  // target degree 3, two variables

  // y = e1 sends [e1]_a to C(a+b, a) [e1]_{a+b}, nonzero by disjointness
  MultiplicationMap diag = mult_map_matrix(vec(f2, {1, 0}), 2, 4);
  CHECK(diag.full_rank);

  // non-disjoint pair: returned but flagged, rank-deficient over F_2
  MultiplicationMap bad = mult_map_matrix(vec(f2, {1, 0}), 1, 1);
  CHECK(!bad.exponents_disjoint);
  CHECK(!bad.full_rank);
  CHECK(bad.column_rank == 1);

  CHECK_THROWS_AS(mult_map_matrix(vec(f2, {0, 0}), 1, 2), std::invalid_argument);
}

TEST_CASE("pure symbol products") {
  FieldSpec f2 = FieldSpec::prime(2);
  // with all points equal, the product is the full-degree pure symbol,
  // with proportionality constant exactly 1
  std::vector<Scalar> v = vec(f2, {1, 1, 0});
  GammaElement tau = pure_symbol_product({v, v, v}, {2, 4, 8});
  CHECK(tau == pure_symbol(v, 14));

  // over characteristic 3 the fold's binomials reduce to 1 as well
  FieldSpec f3 = FieldSpec::prime(3);
  std::vector<Scalar> u = vec(f3, {1, 2});
  CHECK(pure_symbol_product({u, u}, {3, 9}) == pure_symbol(u, 12));

  // over the rationals nothing cancels: the constant is the multinomial
  FieldSpec q = FieldSpec::rationals();
  std::vector<Scalar> w = vec(q, {1, 2});
  CHECK(pure_symbol_product({w, w}, {2, 4}) ==
        pure_symbol(w, 6).scaled(Scalar::of(q, multinomial({2, 4}))));

  // distinct basis vectors give one symbol with coefficient 1
  GammaElement sym = pure_symbol_product({vec(f2, {1, 0}), vec(f2, {0, 1})}, {2, 4});
  CHECK(sym == GammaElement::basis(f2, Composition({2, 4})));

  CHECK_THROWS_AS(pure_symbol_product({vec(f2, {0, 0})}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(pure_symbol_product({vec(f2, {1, 0}), vec(f2, {0, 1})}, {2}),
                  std::invalid_argument);
  // non-disjoint exponents rejected
  CHECK_THROWS_AS(pure_symbol_product({vec(f2, {1, 0}), vec(f2, {0, 1})}, {3, 5}),
                  std::invalid_argument);
}

TEST_CASE("pure symbol product separates tuples over F_3") {
  FieldSpec f3 = FieldSpec::prime(3);
  std::vector<std::vector<Scalar>> reps{vec(f3, {1, 0}), vec(f3, {0, 1}), vec(f3, {1, 1}),
                                        vec(f3, {1, 2})};
  std::vector<GammaElement> images;
  for (const auto& a : reps)
    for (const auto& b : reps) images.push_back(pure_symbol_product({a, b}, {3, 9}));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      CHECK(!proportional(images[i], images[j]));
}

TEST_CASE("shift power") {
  CHECK(shift_power(2, 2) == 4);
  CHECK(shift_power(2, 0) == 3);
  CHECK(shift_power(8, 3) == 9);
  CHECK(shift_power(1, 2) == 2);
  CHECK(shift_power(9, 3) == 27);
  for (std::int64_t c : {std::int64_t{0}, std::int64_t{2}, std::int64_t{3}, std::int64_t{5}})
    for (std::int64_t m = 1; m <= 20; ++m) {
      std::int64_t q = shift_power(m, c);
      CHECK(q > m);
      CHECK(m + q < 2 * q);
      CHECK(is_disjoint_sequence({m, q}, c));
    }
  CHECK_THROWS_AS(shift_power(0, 2), std::invalid_argument);
}

TEST_CASE("shifted subspaces") {
  FieldSpec f2 = FieldSpec::prime(2);
  // a single pure symbol shifts to a single nonzero element
  {
    GammaElement z = pure_symbol(vec(f2, {1, 1, 0}), 2);
    TannakaData data = build_L({z}, vec(f2, {0, 0, 1}));
    CHECK(data.m == 2);
    CHECK(data.q == 4);
    CHECK(data.n == 6);
    CHECK(data.basis_shifted.size() == 1);
    CHECK(!data.basis_shifted[0].is_zero());
    CHECK(data.m_plus_one_nonzero);  // 3 != 0 mod 2
  }
  // the full degree-2 space of a 2-dimensional W keeps dimension 3 in degree 6
  {
    std::vector<GammaElement> full;
    for (const Composition& c : compositions(2, 2)) full.push_back(GammaElement::basis(f2, c));
    TannakaData data = build_L(full, vec(f2, {1, 0}));
    CHECK(data.basis_shifted.size() == 3);
    CHECK(data.n == 6);
  }
  // dependent bases and zero shift vectors are rejected
  GammaElement z = GammaElement::basis(f2, Composition({2, 0}));
  CHECK_THROWS_AS(build_L({z, z}, vec(f2, {1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(build_L({z}, vec(f2, {0, 0})), std::invalid_argument);
}

TEST_CASE("subspace shift agrees with the multiplication-map matrix") {
  FieldSpec f3 = FieldSpec::prime(3);
  const int d = 3;
  std::vector<GammaElement> basis;
  for (const Composition& c : compositions(2, d))
    if (c[0] > 0) basis.push_back(GammaElement::basis(f3, c));  // a 3-element slice
  std::vector<Scalar> w0 = vec(f3, {1, 1, 2});
  TannakaData data = build_L(basis, w0);

  MultiplicationMap mm = mult_map_matrix(w0, data.m, data.q);
  CompositionIndexer low(static_cast<int>(data.m), d);
  CompositionIndexer high(static_cast<int>(data.n), d);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    std::vector<Scalar> image = mm.matrix.apply(dense_coords(basis[t], low));
    CHECK(image == dense_coords(data.basis_shifted[t], high));
  }
}

TEST_CASE("shape separation") {
  ShapeSeparationReport rA = shape_separation_check(2, 2, 2);
  CHECK(rA.q == 4);
  CHECK(rA.n == 6);
  CHECK(rA.certified);
  CHECK(rA.count_two_slots_ge_q == 0);
  CHECK(rA.total == 7);

  ShapeSeparationReport rB = shape_separation_check(1, 0, 3);
  CHECK(rB.q == 2);
  CHECK(rB.n == 3);
  CHECK(rB.certified);
  CHECK(rB.total == 10);

  for (std::int64_t c : {std::int64_t{0}, std::int64_t{2}, std::int64_t{3}})
    for (int m = 1; m <= 8; ++m)
      for (int dim = 2; dim <= 4; ++dim) CHECK(shape_separation_check(m, c, dim).certified);
}

TEST_CASE("diagonal fixed symbol") {
  FieldSpec f2 = FieldSpec::prime(2);
  FixedSymbol w0 = diagonal_fixed_symbol(2, 2, 30, f2);
  CHECK(w0.index_a == 1);
  CHECK(w0.index_b == 3);
  CHECK(w0.symbol == GammaElement::basis(f2, Composition({0, 2, 0, 28})));
  // it is the product of pure symbols at the two block vectors
  CHECK(w0.symbol == pure_symbol_product({vec(f2, {0, 1, 0, 0}), vec(f2, {0, 0, 0, 1})}, {2, 28}));
  CHECK_THROWS_AS(diagonal_fixed_symbol(2, 30, 30, f2), std::invalid_argument);
}

TEST_CASE("diagonal block size bookkeeping") {
  CHECK(diagonal_block_size(0) == 1);   // 2*1 - 1 > 0
  CHECK(diagonal_block_size(1) == 2);
  CHECK(diagonal_block_size(8) == 5);   // 2*5 - 1 = 9 > 8
  for (std::int64_t g = 0; g <= 30; ++g) {
    int n = diagonal_block_size(g);
    CHECK(2 * n - 1 > g);
    CHECK(2 * (n - 1) - 1 <= g);
  }
}
