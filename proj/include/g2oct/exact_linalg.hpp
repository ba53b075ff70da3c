// Dense exact linear algebra over Q(i, sqrt2).
//
// Sizes in this project are small (at most a few hundred rows), so plain
// Gaussian elimination with exact scalars is both fast and certificate-grade:
// ranks, kernels and inertias computed here are exact integers.

#pragma once

#include <optional>
#include <vector>

#include "g2oct/exact.hpp"

namespace g2oct::exact {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const {
    return e_[static_cast<size_t>(r) * cols_ + c];
  }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  Matrix operator-() const { return *this * Scalar(-1); }
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix conj_i() const;  // entrywise Galois conjugation i -> -i
  bool is_zero() const;

  // Matrix commutator [A, B] = AB - BA.
  static Matrix commutator(const Matrix& x, const Matrix& y) ;

  int rank() const;
  // Columns form a basis of the right kernel {x : A x = 0}.
  Matrix kernel() const;
  // Reduced row echelon form.
  Matrix rref() const;
  // Any solution of A x = b, or nullopt if inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const;

  // Trace (square matrices).
  Scalar trace() const;

  // Horizontal concatenation [A | B].
  static Matrix hcat(const Matrix& a, const Matrix& b);

 private:
  int rows_, cols_;
  std::vector<Scalar> e_;
};

// Column vector helpers.
Matrix column(const std::vector<Scalar>& v);

// Signature (positives, negatives, zeros) of a symmetric matrix whose entries
// lie in Q(sqrt2) (no i-part), by exact congruence diagonalization.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Inertia symmetric_inertia(Matrix m);

// True if v (column) lies in the column span of basis.
bool in_span(const Matrix& basis, const Matrix& v);

}  // namespace g2oct::exact
