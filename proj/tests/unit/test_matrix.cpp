#include <doctest.h>

#include "divpow/matrix.hpp"
#include "divpow/rng.hpp"

using namespace divpow;

namespace {
FieldMatrix mat(FieldSpec spec, std::vector<std::vector<std::int64_t>> rows) {
  std::vector<std::vector<Scalar>> out;
  for (auto& r : rows) {
    std::vector<Scalar> row;
    for (std::int64_t v : r) row.push_back(Scalar::of(spec, v));
    out.push_back(std::move(row));
  }
  return FieldMatrix::from_rows(spec, out);
}
}  // namespace

TEST_CASE("rank and kernel over F_2") {
  FieldSpec f2 = FieldSpec::prime(2);
  FieldMatrix m = mat(f2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  for (const Scalar& s : m.apply(ker[0])) CHECK(s.is_zero());
}

TEST_CASE("solve picks a consistent particular solution") {
  FieldSpec f5 = FieldSpec::prime(5);
  FieldMatrix m = mat(f5, {{1, 2}, {3, 4}});
  std::vector<Scalar> rhs{Scalar::of(f5, 1), Scalar::of(f5, 2)};
  auto x = solve(m, rhs);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == rhs);

  FieldMatrix sing = mat(f5, {{1, 2}, {2, 4}});
  std::vector<Scalar> bad{Scalar::of(f5, 1), Scalar::of(f5, 0)};
  CHECK(!solve(sing, bad).has_value());
}

TEST_CASE("inverse round-trips over the rationals") {
  FieldSpec q = FieldSpec::rationals();
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    FieldMatrix m = rng.invertible_matrix(q, 4);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == FieldMatrix::identity(q, 4));
    CHECK(*inv * m == FieldMatrix::identity(q, 4));
  }
  CHECK(!inverse(mat(q, {{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("rank is invariant under random invertible row operations") {
  FieldSpec f3 = FieldSpec::prime(3);
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    FieldMatrix m = rng.matrix(f3, 4, 6);
    FieldMatrix g = rng.invertible_matrix(f3, 4);
    CHECK(rank(m) == rank(g * m));
  }
}

TEST_CASE("kernel dimension plus rank is the column count") {
  Rng rng(13);
  for (std::int64_t c : {std::int64_t{2}, std::int64_t{5}, std::int64_t{0}}) {
    FieldSpec spec = c == 0 ? FieldSpec::rationals() : FieldSpec::prime(c);
    for (int trial = 0; trial < 10; ++trial) {
      FieldMatrix m = rng.matrix(spec, 3, 5);
      CHECK(rank(m) + kernel_basis(m).size() == 5);
    }
  }
}
