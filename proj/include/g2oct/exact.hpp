// Exact arithmetic in the number field Q(i, sqrt(2)).
//
// Every scalar that appears in the seven-dimensional cross-product algebra,
// its distinguished complex basis, and the associated Lie-theoretic
// computations lives in Q(i, sqrt2).  Representing scalars exactly lets the
// algebra and Lie certificates assert equalities instead of tolerances.
//
// A scalar is stored as  a + b*i + c*sqrt2 + d*i*sqrt2  with rational
// coefficients (GMP-backed mpq_class).

#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

namespace g2oct::exact {

using Rational = mpq_class;

class Scalar {
 public:
  Scalar() : a_(0), b_(0), c_(0), d_(0) {}
  Scalar(long v) : a_(v), b_(0), c_(0), d_(0) {}  // NOLINT(runtime/explicit)
  Scalar(const Rational& v) : a_(v), b_(0), c_(0), d_(0) {}
  Scalar(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  // p/q as a rational scalar.
  static Scalar frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return Scalar(r);
  }
  static Scalar i() { return Scalar(0, 1, 0, 0); }
  static Scalar sqrt2() { return Scalar(0, 0, 1, 0); }
  static Scalar i_sqrt2() { return Scalar(0, 0, 0, 1); }
  // 1/sqrt2 = sqrt2/2.
  static Scalar inv_sqrt2() { return Scalar(0, 0, Rational(1, 2), 0); }

  const Rational& ra() const { return a_; }
  const Rational& rb() const { return b_; }
  const Rational& rc() const { return c_; }
  const Rational& rd() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
  // No i-component (element of Q(sqrt2)).
  bool is_real() const { return b_ == 0 && d_ == 0; }

  Scalar operator-() const { return Scalar(-a_, -b_, -c_, -d_); }
  Scalar operator+(const Scalar& o) const {
    return Scalar(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_);
  }
  Scalar operator-(const Scalar& o) const {
    return Scalar(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_);
  }
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Galois conjugations: negate i, respectively sqrt2.
  Scalar conj_i() const { return Scalar(a_, -b_, c_, -d_); }
  Scalar conj_sqrt2() const { return Scalar(a_, b_, -c_, -d_); }

  // Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  // Real and imaginary parts as elements of Q(sqrt2) embedded in the field.
  Scalar real_part() const { return Scalar(a_, 0, c_, 0); }
  Scalar imag_part() const { return Scalar(b_, 0, d_, 0); }

  // Sign of a real element (b == d == 0): -1, 0, +1.  Throws otherwise.
  int sign() const;

  // Numerical embedding with i -> std::complex i, sqrt2 -> 1.41421...
  std::complex<double> to_complex() const;

  std::string str() const;

 private:
  Rational a_, b_, c_, d_;
};

inline Scalar operator*(long v, const Scalar& s) { return Scalar(v) * s; }

}  // namespace g2oct::exact
