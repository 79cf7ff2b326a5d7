#include <doctest.h>

#include "divpow/construct.hpp"
#include "divpow/rng.hpp"
#include "divpow/stab.hpp"

using namespace divpow;

namespace {
std::vector<Scalar> vec(FieldSpec spec, std::vector<std::int64_t> v) {
  std::vector<Scalar> out;
  for (std::int64_t x : v) out.push_back(Scalar::of(spec, x));
  return out;
}
}  // namespace

TEST_CASE("tangent stabilizer of a coordinate power") {
  // x = [e1]_n with d = 2: u must keep e1 on its line, leaving a
  // three-parameter family of (u, c)
  for (std::int64_t c : {std::int64_t{0}, std::int64_t{2}, std::int64_t{5}}) {
    FieldSpec spec = c == 0 ? FieldSpec::rationals() : FieldSpec::prime(c);
    GammaElement x = pure_symbol(vec(spec, {1, 0}), 4);
    LieStabReport rep = lie_stab_line(x);
    CHECK(rep.solution_dim == 3);
    CHECK(!rep.pgl_trivial);
    for (const LieStabSolution& s : rep.basis) {
      CHECK(s.u.at(1, 0).is_zero());  // e1 stays on its line
      CHECK(apply_derivation_action(s.u, x) == x.scaled(s.c));
    }
  }
}

TEST_CASE("scalar family always solves") {
  Rng rng(2718);
  for (std::int64_t c : {std::int64_t{0}, std::int64_t{3}}) {
    FieldSpec spec = c == 0 ? FieldSpec::rationals() : FieldSpec::prime(c);
    for (int trial = 0; trial < 10; ++trial) {
      int d = 2 + static_cast<int>(rng.below(2));
      int n = 1 + static_cast<int>(rng.below(4));
      GammaElement x = pure_symbol(rng.nonzero_vector(spec, d), n);
      FieldMatrix id = FieldMatrix::identity(spec, static_cast<std::size_t>(d));
      CHECK(apply_derivation_action(id, x) == x.scaled(Scalar::of(spec, n)));
      LieStabReport rep = lie_stab_line(x);
      CHECK(rep.solution_dim >= 1);
    }
  }
  CHECK_THROWS_AS(lie_stab_line(GammaElement::zero(FieldSpec::prime(2), 2, 3)),
                  std::invalid_argument);
}

TEST_CASE("line solver agrees with finite enumeration") {
  // count solutions of derivation(u) x = c x over F_q directly and compare
  // with q^dim from the kernel computation
  Rng rng(112358);
  for (std::int64_t q : {std::int64_t{2}, std::int64_t{3}}) {
    FieldSpec spec = FieldSpec::prime(q);
    for (int trial = 0; trial < 4; ++trial) {
      GammaElement x = pure_symbol(rng.nonzero_vector(spec, 2), 2 + static_cast<int>(rng.below(2)));
      LieStabReport rep = lie_stab_line(x);
      std::int64_t expected = 1;
      for (int i = 0; i < rep.solution_dim; ++i) expected *= q;

      std::int64_t found = 0;
      std::vector<std::int64_t> digits(5, 0);  // u entries then c
      for (;;) {
        FieldMatrix u(spec, 2, 2);
        for (int i = 0; i < 4; ++i)
          u.at(static_cast<std::size_t>(i / 2), static_cast<std::size_t>(i % 2)) =
              Scalar::of(spec, digits[static_cast<std::size_t>(i)]);
        Scalar c = Scalar::of(spec, digits[4]);
        if (apply_derivation_action(u, x) == x.scaled(c)) ++found;
        int i = 5;
        bool done = true;
        while (i-- > 0) {
          if (++digits[static_cast<std::size_t>(i)] < q) {
            done = false;
            break;
          }
          digits[static_cast<std::size_t>(i)] = 0;
        }
        if (done) break;
      }
      CHECK(found == expected);
    }
  }
}

TEST_CASE("tangent solution dimension is conjugation-invariant") {
  Rng rng(16180);
  for (std::int64_t c : {std::int64_t{3}, std::int64_t{0}}) {
    FieldSpec spec = c == 0 ? FieldSpec::rationals() : FieldSpec::prime(c);
    for (int trial = 0; trial < 5; ++trial) {
      GammaElement x = gamma_mul(pure_symbol(rng.nonzero_vector(spec, 3), 2),
                                 pure_symbol(rng.nonzero_vector(spec, 3), 3));
      if (x.is_zero()) continue;
      LieStabReport base = lie_stab_line(x);
      FieldMatrix g = rng.invertible_matrix(spec, 3);
      LieStabReport moved = lie_stab_line(apply_induced_action(g, x));
      CHECK(moved.solution_dim == base.solution_dim);
    }
  }
}

TEST_CASE("subspace solver agrees with the line solver") {
  FieldSpec f2 = FieldSpec::prime(2);
  // the full degree-n space is stabilized by everything
  {
    std::vector<GammaElement> full;
    for (const Composition& c : compositions(3, 2)) full.push_back(GammaElement::basis(f2, c));
    SubspaceStabReport rep = lie_stab_subspace(full);
    CHECK(rep.solution_dim == 4);  // all of End(F^2)
    CHECK(rep.pgl_dim == 3);
  }
  // a single line: same u-space as the (u, c) solver
  for (std::int64_t c : {std::int64_t{0}, std::int64_t{2}, std::int64_t{5}}) {
    FieldSpec spec = c == 0 ? FieldSpec::rationals() : FieldSpec::prime(c);
    GammaElement x = pure_symbol(vec(spec, {1, 0}), 4);
    CHECK(lie_stab_subspace({x}).solution_dim == lie_stab_line(x).solution_dim);
  }
  // dependent input is rejected
  GammaElement y = GammaElement::basis(f2, Composition({3, 0}));
  CHECK_THROWS_AS(lie_stab_subspace({y, y}), std::invalid_argument);
}

TEST_CASE("point stabilizer of a coordinate power over F_2") {
  FieldSpec f2 = FieldSpec::prime(2);
  GammaElement x = pure_symbol(vec(f2, {1, 0}), 3);
  PointStabReport rep = brute_point_stab_line(x, 2);
  CHECK(rep.group_order_scanned == 6);  // |GL_2(F_2)|
  CHECK(rep.stabilizers_mod_scalars.size() == 2);  // the unipotent upper-triangulars
  CHECK(!rep.trivial);
  for (const FieldMatrix& g : rep.stabilizers_mod_scalars) {
    CHECK(g.at(1, 0).is_zero());
    CHECK(proportional(x, apply_induced_action(g, x)));
  }
}

TEST_CASE("point stabilizer contains a constructed symmetry") {
  FieldSpec f3 = FieldSpec::prime(3);
  GammaElement x = pure_symbol(vec(f3, {1, 0}), 4) + pure_symbol(vec(f3, {0, 1}), 4);
  PointStabReport rep = brute_point_stab_line(x, 3);
  FieldMatrix swap(f3, 2, 2);
  swap.at(0, 1) = Scalar::one(f3);
  swap.at(1, 0) = Scalar::one(f3);
  bool found = false;
  for (const FieldMatrix& g : rep.stabilizers_mod_scalars)
    if (g == swap) found = true;
  CHECK(found);

  // the returned set is a subgroup modulo scalars: closed under product
  // and inverse
  auto canon = [&](FieldMatrix m) {
    Scalar lead = Scalar::zero(f3);
    for (std::size_t i = 0; i < 4 && lead.is_zero(); ++i) lead = m.at(i / 2, i % 2);
    return m.scaled(lead.inverse());
  };
  auto contains = [&](const FieldMatrix& m) {
    for (const FieldMatrix& g : rep.stabilizers_mod_scalars)
      if (g == m) return true;
    return false;
  };
  for (const FieldMatrix& a : rep.stabilizers_mod_scalars)
    for (const FieldMatrix& b : rep.stabilizers_mod_scalars) {
      CHECK(contains(canon(a * b)));
      CHECK(contains(canon(*inverse(a))));
    }
}

TEST_CASE("enumeration guard") {
  FieldSpec f2 = FieldSpec::prime(2);
  GammaElement x = pure_symbol(vec(f2, {1, 0}), 2);
  CHECK_THROWS_AS(brute_point_stab_line(x, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(brute_point_stab_line(GammaElement::zero(f2, 2, 2), 2),
                  std::invalid_argument);
  // tensor over the wrong field
  GammaElement y = pure_symbol(vec(FieldSpec::prime(3), {1, 0}), 2);
  CHECK_THROWS_AS(brute_point_stab_line(y, 2), std::invalid_argument);

  // environment override of the default guard
  CHECK(default_enum_guard() == 10'000'000);
  setenv("DIVPOW_ENUM_GUARD", "5", 1);
  CHECK(default_enum_guard() == 5);
  CHECK_THROWS_AS(brute_point_stab_line(x, 2), std::invalid_argument);
  setenv("DIVPOW_ENUM_GUARD", "junk", 1);
  CHECK(default_enum_guard() == 10'000'000);
  unsetenv("DIVPOW_ENUM_GUARD");
  CHECK(default_enum_guard() == 10'000'000);
}

TEST_CASE("veronese tangency") {
  TangencyReport rep = veronese_tangency_check(FieldSpec::prime(5), 2, 3, 100, 20240601);
  CHECK(rep.induced_failures == 0);
  CHECK(rep.random_map_failures > 0);  // a random map is almost never tangent
  CHECK(rep.random_failure_fraction > 0.0);
  CHECK(rep.samples == 100);

  TangencyReport repq = veronese_tangency_check(FieldSpec::rationals(), 2, 2, 25, 7);
  CHECK(repq.induced_failures == 0);
}
