// The 14-dimensional Lie algebra of derivations of (Im(O'), x), its Cartan
// data, point stabilizers, and the Z/6-graded root decomposition in the
// complex f-basis frame.
//
// Everything here is computed over Q(i, sqrt2): the derivation algebra as the
// exact kernel of the Leibniz conditions inside End(Im(O')), the root spaces
// as exact simultaneous eigenspaces of a maximal torus that acts diagonally
// in the f-basis, and the involutions sigma (Z/6 grading sign), theta
// (antilinear Cartan conjugation) and lambda = sigma o theta (real structure
// cutting out the split real form) as explicit matrix operations.

#pragma once

#include <optional>
#include <vector>

#include "g2oct/certify.hpp"
#include "g2oct/exact_linalg.hpp"
#include "g2oct/octonion.hpp"

namespace g2oct::lie {

using exact::Matrix;
using exact::Scalar;

// Matrix of w -> z x w in r-coordinates.
Matrix cross_operator(const oct::ImVec& z);

// Exact basis (14 elements, rational entries, r-coordinates) of the
// derivation algebra of the cross product.
const std::vector<Matrix>& derivation_basis();

// Exact basis (21 elements) of the q-skew matrices so(4,3) in r-coordinates.
const std::vector<Matrix>& so43_basis();

bool is_derivation(const Matrix& x);

// Coordinates of x in the derivation basis; nullopt if x lies outside.
std::optional<std::vector<Scalar>> derivation_coords(const Matrix& x);

// Cartan decomposition relative to the definite-quaternion splitting
// Im(O') = span(j, l, jl) + span(delta, eps, deltal, epsl):
// k preserves both summands (dim 6), p exchanges them (dim 8).
struct CartanSplit {
  std::vector<Matrix> k, p;
};
CartanSplit cartan_split();

// Killing form Gram matrix in the derivation basis (rational entries).
const Matrix& killing_gram();
exact::Inertia killing_signature();  // expected (8, 6)

// Subalgebra annihilating a vector; elements in r-coordinates.
std::vector<Matrix> stabilizer_of_vector(const oct::ImVec& v);
// Subalgebra preserving the splitting Im(H') + H' (dim 6).
std::vector<Matrix> stabilizer_of_splitting();

// Killing-Gram inertia of the span of the given derivation-algebra elements
// (restriction of the ambient Killing form).
exact::Inertia restricted_killing_signature(const std::vector<Matrix>& sub);

// ------------------------------------------------------------ graded frame

// Change of frame between r-coordinates and f-coordinates for operators.
Matrix to_f_frame(const Matrix& x_r);  // P^{-1} X P
Matrix to_r_frame(const Matrix& x_f);  // P X P^{-1}

struct RootSpace {
  int n = 0, m = 0;  // root = n*alpha1 + m*alpha2
  int grade = 0;     // -(n+m) mod 6
  Matrix vec;        // normalized root vector, f-frame
};

struct GradedDecomposition {
  std::vector<Matrix> torus;           // 2 diagonal f-frame matrices
  std::vector<RootSpace> roots;        // 12 root spaces
  std::vector<std::vector<Matrix>> grade_spaces;  // bases of g_0..g_5
};
const GradedDecomposition& graded();

// Root vector for (n, m); throws if absent.
const Matrix& root_vector(int n, int m);

// sigma: conjugation by S = diag((-1)^k); acts as (-1)^grade on g_grade.
Matrix sigma(const Matrix& xf);
// theta: X -> Q conj_i(X) Q^{-1} with Q the f-basis Gram of q (antilinear).
Matrix theta(const Matrix& xf);
// lambda = sigma o theta; its fixed set is the split real form.
Matrix lambda_conj(const Matrix& xf);

// The cyclic parameter family: a*X_{-alpha1} + b*X_{-alpha2} + c*X_eta with
// eta = 3 alpha1 + 2 alpha2 the longest root; lies in g_1.  f-frame.
Matrix g1_element(const Scalar& a, const Scalar& b, const Scalar& c);

certify::Certificate lie_certificate();

}  // namespace g2oct::lie
