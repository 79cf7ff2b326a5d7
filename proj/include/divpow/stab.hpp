// Stabilizer solvers for lines and subspaces of Gamma^n(V) under the
// projective group of V: the tangent-level (dual-number) stabilizer via an
// exact linear solve, the finite-field point stabilizer by enumeration of
// GL_d(F_q), and a sampling probe of tangency along the Veronese image.
#ifndef DIVPOW_STAB_HPP
#define DIVPOW_STAB_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "divpow/gamma.hpp"
#include "divpow/matrix.hpp"

namespace divpow {

struct LieStabSolution {
  FieldMatrix u;
  Scalar c;
};

/// Solutions (u, c) of derivation(u) x = c x. The scalar family
/// (lambda*Id, n*lambda) is always a solution line, so the stabilizer is
/// trivial at the tangent level exactly when the solution dimension is 1.
struct LieStabReport {
  int solution_dim = 0;
  std::vector<LieStabSolution> basis;
  bool pgl_trivial = false;

  nlohmann::json to_json() const;
};

LieStabReport lie_stab_line(const GammaElement& x);

/// Solutions u of derivation(u) l in span(L) for every l in L. The scalar
/// line is always contained, so pgl_dim = solution_dim - 1.
struct SubspaceStabReport {
  int solution_dim = 0;
  int pgl_dim = 0;
  std::vector<FieldMatrix> basis;

  nlohmann::json to_json() const;
};

SubspaceStabReport lie_stab_subspace(const std::vector<GammaElement>& L);

/// Elements of GL_d(F_q) fixing the line of x, listed modulo scalar
/// matrices (each representative rescaled so its first nonzero entry is 1).
struct PointStabReport {
  std::int64_t group_order_scanned = 0;
  std::vector<FieldMatrix> stabilizers_mod_scalars;
  bool trivial = false;

  nlohmann::json to_json() const;
};

/// Enumeration guard: the size of GL_d(F_q) must not exceed this. Default
/// 10^7, overridable through the DIVPOW_ENUM_GUARD environment variable.
std::int64_t default_enum_guard();

PointStabReport brute_point_stab_line(const GammaElement& x, std::int64_t q,
                                      std::int64_t guard = default_enum_guard());

/// For sampled u in End(V) and Veronese points [v]_n, checks that the
/// derivation of u moves [v]_n inside the tangent span
/// span{[e_j]_1 [v]_{n-1}} + F [v]_n (this must always hold), and reports
/// how often random endomorphisms of Gamma^n(V) violate the same tangency
/// (statistics, not a proof of rigidity).
struct TangencyReport {
  int dim = 0;
  int degree = 0;
  int samples = 0;
  int induced_failures = 0;       // must stay 0
  int random_map_failures = 0;
  double random_failure_fraction = 0.0;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
};

TangencyReport veronese_tangency_check(FieldSpec spec, int d, int n, int samples,
                                       std::uint64_t seed);

}  // namespace divpow

#endif
