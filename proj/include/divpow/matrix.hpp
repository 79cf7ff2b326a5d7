// Dense matrices of exact scalars with Gaussian elimination (deterministic
// first-nonzero pivoting; no tolerances, arithmetic is exact).
#ifndef DIVPOW_MATRIX_HPP
#define DIVPOW_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "divpow/field.hpp"

namespace divpow {

class FieldMatrix {
 public:
  FieldMatrix(FieldSpec spec, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(FieldSpec spec, std::size_t n);
  static FieldMatrix from_rows(FieldSpec spec, const std::vector<std::vector<Scalar>>& rows);

  FieldSpec spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix scaled(const Scalar& s) const;
  FieldMatrix transposed() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  bool is_zero() const;
  bool operator==(const FieldMatrix& o) const;
  bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

 private:
  FieldSpec spec_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  FieldMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

RrefResult row_reduce(FieldMatrix m);
std::size_t rank(const FieldMatrix& m);

/// Basis of the right kernel (solutions of m x = 0), one vector per free
/// column, in column order.
std::vector<std::vector<Scalar>> kernel_basis(const FieldMatrix& m);

/// A solution of m x = rhs with free variables set to zero, or nullopt if
/// the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const FieldMatrix& m, const std::vector<Scalar>& rhs);

std::optional<FieldMatrix> inverse(const FieldMatrix& m);

}  // namespace divpow

#endif
