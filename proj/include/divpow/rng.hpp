// Deterministic random data for property sweeps. Same seed, same stream,
// on every platform (raw mt19937_64 draws, no library distributions).
#ifndef DIVPOW_RNG_HPP
#define DIVPOW_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "divpow/field.hpp"
#include "divpow/matrix.hpp"

namespace divpow {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::int64_t below(std::int64_t n) { return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(n)); }

  /// Uniform residue for prime fields; a small integer in [-4, 4] otherwise.
  Scalar scalar(FieldSpec spec) {
    if (spec.is_prime_field()) return Scalar::of(spec, below(spec.characteristic));
    return Scalar::of(spec, below(9) - 4);
  }

  Scalar nonzero_scalar(FieldSpec spec) {
    for (;;) {
      Scalar s = scalar(spec);
      if (!s.is_zero()) return s;
    }
  }

  std::vector<Scalar> vector(FieldSpec spec, int d) {
    std::vector<Scalar> v;
    v.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) v.push_back(scalar(spec));
    return v;
  }

  std::vector<Scalar> nonzero_vector(FieldSpec spec, int d) {
    for (;;) {
      std::vector<Scalar> v = vector(spec, d);
      for (const Scalar& s : v)
        if (!s.is_zero()) return v;
    }
  }

  FieldMatrix matrix(FieldSpec spec, int rows, int cols) {
    FieldMatrix m(spec, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = scalar(spec);
    return m;
  }

  FieldMatrix invertible_matrix(FieldSpec spec, int n);

 private:
  std::mt19937_64 eng_;
};

}  // namespace divpow

#endif
