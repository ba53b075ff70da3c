#include "g2oct/exact.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace g2oct::exact {

Scalar Scalar::operator*(const Scalar& o) const {
  // (a1 + b1 i + c1 s + d1 is)(a2 + b2 i + c2 s + d2 is), s = sqrt2,
  // using i^2 = -1, s^2 = 2, (is)^2 = -2.
  const Rational &a1 = a_, &b1 = b_, &c1 = c_, &d1 = d_;
  const Rational &a2 = o.a_, &b2 = o.b_, &c2 = o.c_, &d2 = o.d_;
  return Scalar(a1 * a2 - b1 * b2 + 2 * c1 * c2 - 2 * d1 * d2,
                a1 * b2 + b1 * a2 + 2 * c1 * d2 + 2 * d1 * c2,
                a1 * c2 + c1 * a2 - b1 * d2 - d1 * b2,
                a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar::inverse of zero");
  // x * conj_i(x) kills the i-part; multiplying the result by its sqrt2
  // conjugate yields the rational field norm.
  const Scalar n1 = *this * conj_i();              // in Q(sqrt2)
  const Scalar n2 = n1 * n1.conj_sqrt2();          // rational
  const Rational& n = n2.ra();
  if (n == 0) throw std::domain_error("Scalar::inverse: zero field norm");
  Scalar num = conj_i() * n1.conj_sqrt2();
  const Rational inv_n = Rational(1) / n;
  return Scalar(inv_n) * num;
}

int Scalar::sign() const {
  if (!is_real()) throw std::domain_error("Scalar::sign of non-real element");
  // sign of a + c*sqrt2.
  const int sa = sgn(a_), sc = sgn(c_);
  if (sc == 0) return sa;
  if (sa == 0) return sc;
  if (sa == sc) return sa;
  // Opposite signs: compare a^2 with 2 c^2; sign follows the larger term.
  const Rational lhs = a_ * a_, rhs = 2 * c_ * c_;
  if (lhs == rhs) return 0;  // cannot happen for rational a, c != 0
  return lhs > rhs ? sa : sc;
}

std::complex<double> Scalar::to_complex() const {
  const double s = std::sqrt(2.0);
  return {a_.get_d() + c_.get_d() * s, b_.get_d() + d_.get_d() * s};
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& r, const char* unit) {
    if (r == 0) return;
    if (!first) os << (r > 0 ? " + " : " - ");
    Rational ab = abs(r);
    if (first && r < 0) os << "-";
    if (ab != 1 || unit[0] == '\0')
      os << ab.get_str() << (unit[0] ? "*" : "");
    os << unit;
    first = false;
  };
  emit(a_, "");
  emit(b_, "i");
  emit(c_, "sqrt2");
  emit(d_, "i*sqrt2");
  return os.str();
}

}  // namespace g2oct::exact
