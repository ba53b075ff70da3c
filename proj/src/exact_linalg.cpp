#include "g2oct/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace g2oct::exact {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix::*: shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conj_i() const {
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].conj_i();
  return r;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::commutator(const Matrix& x, const Matrix& y) {
  return x * y - y * x;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

namespace {

// Row-reduces m in place; returns pivot column indices.
std::vector<int> eliminate(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) { p = r; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Scalar inv = m(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (int j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::rref() const {
  Matrix m = *this;
  eliminate(m);
  return m;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(eliminate(m).size());
}

Matrix Matrix::kernel() const {
  Matrix m = *this;
  const std::vector<int> pivots = eliminate(m);
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < cols_; ++c) {
      if (pi < pivots.size() && pivots[pi] == c) { ++pi; continue; }
      free_cols.push_back(c);
    }
  }
  Matrix basis(cols_, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const int fc = free_cols[k];
    basis(fc, static_cast<int>(k)) = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<int>(k)) = -m(static_cast<int>(r), fc);
  }
  return basis;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows() != rows_) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug = hcat(*this, b);
  const std::vector<int> pivots = eliminate(aug);
  // Inconsistent if a pivot lands in the augmented block.
  for (int p : pivots)
    if (p >= cols_) return std::nullopt;
  Matrix x(cols_, b.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j)
      x(pivots[r], j) = aug(static_cast<int>(r), cols_ + j);
  return x;
}

Matrix column(const std::vector<Scalar>& v) {
  Matrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

Inertia symmetric_inertia(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inertia: not square");
  const int n = m.rows();
  auto add_row_col = [&](int dst, int src, const Scalar& f) {
    for (int j = 0; j < n; ++j) m(dst, j) += f * m(src, j);
    for (int j = 0; j < n; ++j) m(j, dst) += f * m(j, src);
  };
  auto swap_row_col = [&](int a, int b) {
    for (int j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
    for (int j = 0; j < n; ++j) std::swap(m(j, a), m(j, b));
  };
  Inertia out;
  for (int k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      int d = -1;
      for (int j = k + 1; j < n; ++j)
        if (!m(j, j).is_zero()) { d = j; break; }
      if (d >= 0) {
        swap_row_col(k, d);
      } else {
        // All remaining diagonal entries vanish; bring in an off-diagonal one.
        int a = -1, b = -1;
        for (int i = k; i < n && a < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (!m(i, j).is_zero()) { a = i; b = j; break; }
        if (a < 0) { out.zero = n - k; break; }
        add_row_col(a, b, Scalar(1));  // makes m(a,a) = 2 m(a,b) != 0
        if (a != k) swap_row_col(k, a);
      }
    }
    const Scalar piv = m(k, k);
    for (int r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      add_row_col(r, k, -(m(r, k) / piv));
    }
    const int s = piv.sign();
    if (s > 0) ++out.positive;
    else if (s < 0) ++out.negative;
    else ++out.zero;
  }
  return out;
}

bool in_span(const Matrix& basis, const Matrix& v) {
  return basis.solve(v).has_value();
}

}  // namespace g2oct::exact
