// Minimal exterior algebra over a 7-dimensional space with exact scalars.
//
// A k-form is stored by its coefficients on strictly increasing index tuples,
// with the determinant normalization: (e_{i1}* ^ ... ^ e_{ik}*) evaluated on
// (e_{i1}, ..., e_{ik}) equals 1.  This is all the volume-normalization
// certificate needs: wedge products, contractions, and evaluation.

#pragma once

#include <array>
#include <vector>

#include "g2oct/exact.hpp"

namespace g2oct::forms {

using exact::Scalar;

constexpr int kDim = 7;

class Form {
 public:
  explicit Form(int degree);

  int degree() const { return degree_; }

  // Coefficient on the strictly increasing tuple idx (size == degree).
  Scalar& coeff(const std::vector<int>& idx);
  const Scalar& coeff(const std::vector<int>& idx) const;

  Form operator+(const Form& o) const;
  Form operator*(const Scalar& s) const;
  Form wedge(const Form& o) const;
  // Interior product with a vector (coordinates in the same basis).
  Form contract(const std::array<Scalar, kDim>& v) const;
  // Evaluation on degree() many vectors.
  Scalar eval(const std::vector<std::array<Scalar, kDim>>& vecs) const;

  const std::vector<Scalar>& raw() const { return c_; }
  std::vector<Scalar>& raw() { return c_; }

  // All strictly increasing k-tuples from {0..6}, lexicographic.
  static const std::vector<std::vector<int>>& tuples(int k);

 private:
  int degree_;
  std::vector<Scalar> c_;
};

}  // namespace g2oct::forms
