// Builders for the explicit tensors and subspaces the solvers run on: the
// product-of-pure-symbols tensor with trivial projective stabilizer,
// multiplication maps by a fixed pure symbol (injective for disjoint
// exponents), the degree shift q and the shifted subspace it produces, and
// the exponent-shape separation certificate behind the shift.
#ifndef DIVPOW_CONSTRUCT_HPP
#define DIVPOW_CONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "divpow/gamma.hpp"
#include "divpow/matrix.hpp"

namespace divpow {

/// x = [e_1]_{a_1} ... [e_d]_{a_d} [e_1+...+e_d]_{a_{d+1}} in Gamma^r(F^d),
/// for a disjoint exponent sequence (1, a_1, ..., a_{d+1}). Nonzero by
/// construction, with trivial stabilizer line under the projective group.
struct FreeTensor {
  int dim = 0;
  FieldSpec spec;
  std::vector<std::int64_t> exponents;  // a_1, ..., a_{d+1}
  std::int64_t total_degree = 0;        // r
  GammaElement x;

  nlohmann::json to_json() const;
};

FreeTensor build_free_tensor(int d, FieldSpec spec,
                             std::optional<std::vector<std::int64_t>> a = std::nullopt);

/// Matrix of x -> x * [y]_b from Gamma^a(V) to Gamma^{a+b}(V), columns in
/// composition order. For a disjoint exponent pair the map is injective and
/// full column rank is asserted; otherwise the matrix is returned with the
/// assertion skipped and flagged.
struct MultiplicationMap {
  FieldMatrix matrix;
  bool exponents_disjoint = false;
  std::int64_t column_rank = 0;
  bool full_rank = false;
};

MultiplicationMap mult_map_matrix(const std::vector<Scalar>& y, std::int64_t a, std::int64_t b);

/// [x_1]_{a_1} ... [x_k]_{a_k} for nonzero points x_i and a disjoint
/// exponent sequence; nonzero by construction.
GammaElement pure_symbol_product(const std::vector<std::vector<Scalar>>& points,
                                 const std::vector<std::int64_t>& exponents);

/// The degree shift: m+1 in characteristic 0, otherwise the smallest power
/// of p strictly greater than m. The pair (m, shift_power(m)) is always
/// disjoint, and m + q < 2q.
std::int64_t shift_power(std::int64_t m, std::int64_t characteristic);

/// A subspace of Gamma^m(W) together with its image under multiplication by
/// [w_0]_q in Gamma^n(W), n = m + q. The image has the same dimension.
struct TannakaData {
  int w_dim = 0;
  std::int64_t m = 0, q = 0, n = 0;
  std::vector<Scalar> w0;
  std::vector<GammaElement> basis_low;      // the given basis of L_Z
  std::vector<GammaElement> basis_shifted;  // basis of L = M_{w0}(L_Z)
  bool m_plus_one_nonzero = false;          // m+1 != 0 in the base field

  nlohmann::json to_json() const;
};

TannakaData build_L(const std::vector<GammaElement>& L_Z, const std::vector<Scalar>& w0);

/// Certifies that no composition of n = m + q in `dim` parts has two
/// distinct entries both >= q (arithmetically forced by n < 2q), and counts
/// the compositions with first resp. second entry >= q.
struct ShapeSeparationReport {
  std::int64_t m = 0, q = 0, n = 0;
  int dim = 0;
  std::int64_t total = 0;
  std::int64_t count_first_ge_q = 0;
  std::int64_t count_second_ge_q = 0;
  std::int64_t count_two_slots_ge_q = 0;  // must stay 0
  bool certified = false;

  nlohmann::json to_json() const;
};

ShapeSeparationReport shape_separation_check(std::int64_t m, std::int64_t characteristic,
                                             int dim);

/// The symbol [e_{n_block}]_{a1} [e_{2 n_block}]_{r-a1} in Gamma^r(F^{2
/// n_block}): a single basis symbol with coefficient 1, fixed by block
/// scalars of the two diagonal copies.
struct FixedSymbol {
  int index_a = 0;  // 0-based index n_block - 1
  int index_b = 0;  // 0-based index 2*n_block - 1
  GammaElement symbol;
};

FixedSymbol diagonal_fixed_symbol(int n_block, std::int64_t a1, std::int64_t r, FieldSpec spec);

/// Smallest block size n with 2n - 1 > group_dim, so a diagonal embedding
/// into GL_{2n} leaves enough room for the orbit-dimension argument.
int diagonal_block_size(std::int64_t group_dim);

}  // namespace divpow

#endif
