// Split octonions, their imaginary part with cross product, and the
// distinguished complex basis used throughout the project.
//
// Two presentations are implemented and cross-checked:
//   * Cayley-Dickson over the split quaternions H' = span(1, j, delta, eps)
//     with j^2 = -1, delta^2 = eps^2 = +1, j*delta = -delta*j = eps, and
//     l = (0,1), l^2 = -1:
//       (x1, y1) * (x2, y2) = (x1 x2 - conj(y2) y1, y2 x1 + y1 conj(x2)).
//   * Cayley-Dickson over the definite quaternions H = span(1, j, d, e) with
//     lambda = (0,1), lambda^2 = +1:
//       (a1, b1) * (a2, b2) = (a1 a2 + conj(b2) b1, b2 a1 + b1 conj(a2)).
// The identification sends the basis {1, j, delta, eps, l, jl, deltal, epsl}
// to {1, j, e lambda, d lambda, d, e, j lambda, lambda}.
//
// The imaginary part Im(O') carries the orthonormal basis
//   r1..r7 = {j, delta, eps, l, jl, deltal, epsl}
// (quadratic form diag(-1,+1,+1,-1,-1,+1,+1), signature (4,3)) and the cross
// product z1 x z2 = Im(z1 z2).  The complex basis (f_-3, ..., f_3) of
// Im(O') tensor C diagonalizes the cross product by j = f_0.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "g2oct/certify.hpp"
#include "g2oct/exact.hpp"
#include "g2oct/exact_linalg.hpp"

namespace g2oct::oct {

using exact::Matrix;
using exact::Scalar;

// Full split octonion in the basis {1, j, delta, eps, l, jl, deltal, epsl}.
struct Octonion {
  std::array<Scalar, 8> c{};

  static Octonion unit(int k) {
    Octonion o;
    o.c[static_cast<size_t>(k)] = Scalar(1);
    return o;
  }
  bool operator==(const Octonion& o) const { return c == o.c; }
  Octonion operator+(const Octonion& o) const;
  Octonion operator-(const Octonion& o) const;
  Octonion operator*(const Scalar& s) const;
  Octonion conj() const;  // octonion conjugation: negate imaginary part
  Scalar re() const { return c[0]; }
  std::string str() const;
};

// Product in the split-quaternion Cayley-Dickson presentation.
Octonion mul(const Octonion& a, const Octonion& b);

// Product computed through the definite-quaternion presentation, mapped back.
// Used only as a cross-check of mul().
Octonion mul_via_quaternions(const Octonion& a, const Octonion& b);

// Element of Im(O') (possibly complexified: coordinates in Q(i, sqrt2)).
struct ImVec {
  std::array<Scalar, 7> v{};

  static ImVec unit(int k) {
    ImVec z;
    z.v[static_cast<size_t>(k)] = Scalar(1);
    return z;
  }
  bool operator==(const ImVec& o) const { return v == o.v; }
  ImVec operator+(const ImVec& o) const;
  ImVec operator-(const ImVec& o) const;
  ImVec operator*(const Scalar& s) const;
  bool is_zero() const;
  // Coordinates have no i-part (element of the real form Im(O')).
  bool is_real() const;
  Octonion embed() const;  // into O' with zero real part
};

// Bilinear structure on Im(O').
ImVec cross(const ImVec& a, const ImVec& b);        // Im(a b)
Scalar inner(const ImVec& a, const ImVec& b);       // Re(a b) polarized form
Scalar quad(const ImVec& a);                        // q(a) = <a, a>
Scalar omega(const ImVec& a, const ImVec& b, const ImVec& c);  // <a x b, c>

// The complex basis (f_-3, f_-2, ..., f_3); index 0..6 <-> subscript -3..3.
std::array<ImVec, 7> f_basis();

// Change of basis: columns of P are the f-basis vectors in r-coordinates;
// Pinv maps r-coordinates to f-coordinates.
const Matrix& f_change_of_basis();      // P
const Matrix& f_change_of_basis_inv();  // P^{-1}

// f-coordinates of an ImVec, and back.
std::array<Scalar, 7> to_f_coords(const ImVec& z);
ImVec from_f_coords(const std::array<Scalar, 7>& c);

// Cross-product structure constants in the f-basis: table[a][b] is the
// f-coordinate vector of f_{a-3} x f_{b-3}.
std::array<std::array<std::array<Scalar, 7>, 7>, 7> f_mult_table();

// The same table as frozen from the published presentation (rows x columns
// reading), for certification.
std::array<std::array<std::array<Scalar, 7>, 7>, 7> f_mult_table_reference();

// Gram matrix of q and matrix of J_{f0} = f0 x (.) in the f-basis.
Matrix q_gram_f();
Matrix j_f0_matrix();

// Gram matrix of q in the r-basis: diag(-1,+1,+1,-1,-1,+1,+1).
Matrix q_gram_r();

// Seeded pseudo-random element with small rational coordinates.
ImVec random_imvec(std::uint64_t& state);

// Full certificate for the algebra layer (acceptance criterion: exact).
certify::Certificate algebra_certificate();

}  // namespace g2oct::oct
