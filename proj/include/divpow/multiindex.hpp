// Compositions (exponent vectors), multinomial coefficients, base-p carry
// counting, digit-wise reduction mod p, and the disjointness predicate that
// guarantees unit multinomial factors.
#ifndef DIVPOW_MULTIINDEX_HPP
#define DIVPOW_MULTIINDEX_HPP

#include <cstdint>
#include <vector>

#include "divpow/field.hpp"

namespace divpow {

/// An exponent vector (a_1, ..., a_d) of nonnegative integers with its sum
/// cached. Indexes the monomial symbol bases of divided and symmetric powers.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Composition&, const Composition&) = default;
  bool operator<(const Composition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
  int degree_;
};

/// All d-part compositions of n, ordered with the first part descending
/// (so (n,0,...,0) first and (0,...,0,n) last). Length C(n+d-1, d-1).
std::vector<Composition> compositions(int n, int d);

/// Number of d-part compositions of n, capped to avoid overflow.
std::int64_t composition_count(int n, int d);

/// Maps compositions of fixed (n, d) to their position in the enumeration
/// order of compositions(n, d), and back.
class CompositionIndexer {
 public:
  CompositionIndexer(int n, int d);

  std::int64_t size() const { return static_cast<std::int64_t>(list_.size()); }
  std::int64_t rank(const Composition& c) const;
  const Composition& at(std::int64_t idx) const { return list_[static_cast<std::size_t>(idx)]; }
  const std::vector<Composition>& all() const { return list_; }

 private:
  int n_, d_;
  std::vector<Composition> list_;
};

/// Thread-local cached indexer for repeated products at the same degree.
const CompositionIndexer& shared_indexer(int n, int d);

BigInt factorial_big(std::int64_t n);
BigInt binomial_big(std::int64_t n, std::int64_t k);

/// (sum parts)! / prod(parts_i!), exactly.
BigInt multinomial(const std::vector<std::int64_t>& parts);

/// p-adic valuation of a nonzero integer.
int padic_valuation(BigInt value, std::int64_t p);

/// Number of carries when adding all parts in base p, folding left to right
/// and propagating carries. Equals the p-adic valuation of the multinomial
/// coefficient of the parts.
int carry_count(const std::vector<std::int64_t>& parts, std::int64_t p);

/// C(n, k) mod p computed digit by digit in base p.
std::int64_t binomial_mod_p(std::int64_t n, std::int64_t k, std::int64_t p);

/// Multinomial coefficient reduced mod p, computed digit-wise (zero as soon
/// as the digits of the parts fail to add without carries).
Scalar multinomial_mod_p(const std::vector<std::int64_t>& parts, std::int64_t p);

/// True iff every prefix sum a_1+...+a_i is < a_{i+1}, and, over a field of
/// characteristic p, also < p^{v_p(a_{i+1})}. Such exponent sequences
/// multiply in the divided power algebra without carries, so the multinomial
/// factors involved stay prime to p. All entries must be positive.
bool is_disjoint_sequence(const std::vector<std::int64_t>& seq, std::int64_t characteristic);

/// A canonical sequence passing is_disjoint_sequence: consecutive powers of p
/// (of 2 in characteristic 0), optionally preceded by 1.
std::vector<std::int64_t> make_disjoint_sequence(int count, std::int64_t characteristic,
                                                 bool leading_one);

}  // namespace divpow

#endif
