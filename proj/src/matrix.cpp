#include "divpow/matrix.hpp"

#include <stdexcept>

namespace divpow {

FieldMatrix::FieldMatrix(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(spec)) {}

FieldMatrix FieldMatrix::identity(FieldSpec spec, std::size_t n) {
  FieldMatrix m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(spec);
  return m;
}

FieldMatrix FieldMatrix::from_rows(FieldSpec spec, const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows: no rows");
  FieldMatrix m(spec, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_ || !(spec_ == o.spec_))
    throw std::invalid_argument("matrix product: shape or field mismatch");
  FieldMatrix m(spec_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += x * o.at(k, j);
    }
  return m;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(spec_ == o.spec_))
    throw std::invalid_argument("matrix sum: shape or field mismatch");
  FieldMatrix m(spec_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  return *this + o.scaled(-Scalar::one(spec_));
}

FieldMatrix FieldMatrix::scaled(const Scalar& s) const {
  FieldMatrix m(spec_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix m(spec_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

std::vector<Scalar> FieldMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(spec_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

bool FieldMatrix::is_zero() const {
  for (const Scalar& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && spec_ == o.spec_ && a_ == o.a_;
}

RrefResult row_reduce(FieldMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // first nonzero entry at or below `row`
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar f = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{std::move(m), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<std::vector<Scalar>> kernel_basis(const FieldMatrix& m) {
  RrefResult rr = row_reduce(m);
  const FieldMatrix& r = rr.reduced;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.spec()));
    v[free_col] = Scalar::one(m.spec());
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
      v[rr.pivot_cols[i]] = -r.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const FieldMatrix& m, const std::vector<Scalar>& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  FieldMatrix aug(m.spec(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[r];
  }
  RrefResult rr = row_reduce(std::move(aug));
  for (std::size_t c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt;  // pivot in the rhs column
  std::vector<Scalar> x(m.cols(), Scalar::zero(m.spec()));
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
    x[rr.pivot_cols[i]] = rr.reduced.at(i, m.cols());
  return x;
}

std::optional<FieldMatrix> inverse(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  std::size_t n = m.rows();
  FieldMatrix aug(m.spec(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.spec());
  }
  RrefResult rr = row_reduce(std::move(aug));
  if (rr.pivot_cols.size() < n || rr.pivot_cols[n - 1] != n - 1) return std::nullopt;
  FieldMatrix inv(m.spec(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rr.reduced.at(r, n + c);
  return inv;
}

}  // namespace divpow
