#include <doctest.h>

#include <functional>

#include "divpow/multiindex.hpp"

using namespace divpow;

TEST_CASE("composition enumeration") {
  auto cs = compositions(2, 2);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].parts() == std::vector<int>{2, 0});
  CHECK(cs[1].parts() == std::vector<int>{1, 1});
  CHECK(cs[2].parts() == std::vector<int>{0, 2});

  CHECK(compositions(0, 3).size() == 1);
  CHECK(compositions(0, 3)[0].parts() == std::vector<int>{0, 0, 0});

  CHECK(compositions(30, 3).size() == 496);
  CHECK(composition_count(30, 3) == 496);
}

TEST_CASE("indexer rank is the enumeration position") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {5, 3}, {7, 4}, {3, 1}}) {
    CompositionIndexer indexer(n, d);
    for (std::int64_t i = 0; i < indexer.size(); ++i) CHECK(indexer.rank(indexer.at(i)) == i);
  }
}

TEST_CASE("multinomial values") {
  CHECK(multinomial({1, 1}) == 2);
  CHECK(multinomial({2, 1}) == 3);
  CHECK(multinomial({1, 3}) == 4);  // C(4,1)
  CHECK(multinomial({}) == 1);
  CHECK(multinomial({0, 5, 0}) == 1);
  CHECK(multinomial({10, 10, 10}) == BigInt("5550996791340"));
}

TEST_CASE("carry counts") {
  CHECK(carry_count({1, 1}, 2) == 1);
  CHECK(carry_count({3, 4}, 2) == 0);  // disjoint binary digits
  CHECK(carry_count({1, 3}, 2) == 2);
  CHECK(carry_count({}, 5) == 0);
  CHECK(carry_count({0, 7, 0}, 3) == 0);
  CHECK_THROWS_AS(carry_count({1, 1}, 4), std::invalid_argument);
}

TEST_CASE("carry count equals p-adic valuation of the multinomial") {
  // positive part-lists with sum <= 10
  std::vector<std::int64_t> cur;
  std::function<void(int)> sweep = [&](int rem) {
    if (!cur.empty() || rem == 0) {
      BigInt m = multinomial(cur);
      for (std::int64_t p : {std::int64_t{2}, std::int64_t{3}, std::int64_t{5}}) {
        CHECK(carry_count(cur, p) == padic_valuation(m, p));
        CHECK(multinomial_mod_p(cur, p).residue() == static_cast<std::int64_t>(m % p));
      }
    }
    for (int f = 1; f <= rem; ++f) {
      cur.push_back(f);
      sweep(rem - f);
      cur.pop_back();
    }
  };
  sweep(10);
}

TEST_CASE("digit-wise multinomial examples") {
  CHECK(multinomial_mod_p({2, 1}, 2).residue() == 1);
  CHECK(multinomial_mod_p({1, 1}, 2).residue() == 0);
  CHECK(multinomial_mod_p({0, 9}, 7).residue() == 1);
  CHECK(binomial_mod_p(10, 4, 3) == static_cast<std::int64_t>(binomial_big(10, 4) % 3));
}

TEST_CASE("disjoint sequences") {
  CHECK(is_disjoint_sequence({1, 2, 4, 8, 16}, 2));
  CHECK(is_disjoint_sequence({1, 3, 9, 27}, 3));
  CHECK(!is_disjoint_sequence({2, 3}, 2));  // 2 >= 2^{v_2(3)} = 1
  CHECK(is_disjoint_sequence({2, 3}, 0));   // characteristic 0 drops that condition
  CHECK(!is_disjoint_sequence({3, 3}, 0));
  CHECK(is_disjoint_sequence({5}, 0));
  CHECK(!is_disjoint_sequence({0, 2}, 0));  // entries must be positive
  // prime-power entries with increasing exponents
  CHECK(is_disjoint_sequence({5, 25, 625}, 5));
}

TEST_CASE("disjoint pairs give prime-to-p multinomials") {
  for (std::int64_t p : {std::int64_t{2}, std::int64_t{3}, std::int64_t{5}})
    for (std::int64_t a = 1; a <= 12; ++a)
      for (std::int64_t b = 1; a + b <= 14; ++b)
        if (is_disjoint_sequence({a, b}, p)) CHECK(!multinomial_mod_p({a, b}, p).is_zero());
}

TEST_CASE("generated sequences pass the predicate") {
  CHECK(make_disjoint_sequence(4, 2, true) == std::vector<std::int64_t>{1, 2, 4, 8, 16});
  CHECK(make_disjoint_sequence(1, 0, false) == std::vector<std::int64_t>{2});
  CHECK(make_disjoint_sequence(3, 3, true) == std::vector<std::int64_t>{1, 3, 9, 27});
  for (std::int64_t c : {std::int64_t{0}, std::int64_t{2}, std::int64_t{3}, std::int64_t{7}})
    for (int count = 1; count <= 6; ++count)
      for (bool lead : {false, true})
        CHECK(is_disjoint_sequence(make_disjoint_sequence(count, c, lead), c));
}
