#include "g2oct/octonion.hpp"

#include <sstream>
#include <stdexcept>

#include "g2oct/forms.hpp"

namespace g2oct::oct {

namespace {

// ------------------------------------------------------------- quaternions
// A quaternion-like 4-vector with a hardcoded basis product table.
using Quat = std::array<Scalar, 4>;

struct QuatEntry {
  int idx;
  int sign;
};

// Split quaternions H' over {1, j, delta, eps}: j^2 = -1,
// delta^2 = eps^2 = +1, j delta = eps = -delta j, delta eps = -j, eps delta = j.
constexpr QuatEntry kSplitTable[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
    {{2, 1}, {3, -1}, {0, 1}, {1, -1}},
    {{3, 1}, {2, 1}, {1, 1}, {0, 1}},
};

// Definite quaternions H over {1, j, d, e}: j^2 = d^2 = e^2 = -1,
// j d = e, d e = j, e j = d.
constexpr QuatEntry kDefTable[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
    {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
    {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
};

Quat qmul(const Quat& a, const Quat& b, const QuatEntry table[4][4]) {
  Quat r{};
  for (int i = 0; i < 4; ++i) {
    if (a[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (b[static_cast<size_t>(j)].is_zero()) continue;
      const QuatEntry& e = table[i][j];
      r[static_cast<size_t>(e.idx)] +=
          a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] * Scalar(e.sign);
    }
  }
  return r;
}

Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quat qadd(const Quat& a, const Quat& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
Quat qsub(const Quat& a, const Quat& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

// ---------------------------------------------- quaternion presentation O'
// Basis {1, j, d, e, lambda, j lambda, d lambda, e lambda}; product by
// Cayley-Dickson with lambda^2 = +1:
//   (a1, b1)(a2, b2) = (a1 a2 + conj(b2) b1, b2 a1 + b1 conj(a2)).
struct QuatOct {
  std::array<Scalar, 8> c{};
};

QuatOct qo_mul(const QuatOct& x, const QuatOct& y) {
  const Quat a1{x.c[0], x.c[1], x.c[2], x.c[3]};
  const Quat b1{x.c[4], x.c[5], x.c[6], x.c[7]};
  const Quat a2{y.c[0], y.c[1], y.c[2], y.c[3]};
  const Quat b2{y.c[4], y.c[5], y.c[6], y.c[7]};
  const Quat p = qadd(qmul(a1, a2, kDefTable), qmul(qconj(b2), b1, kDefTable));
  const Quat q = qadd(qmul(b2, a1, kDefTable), qmul(b1, qconj(a2), kDefTable));
  QuatOct r;
  for (int i = 0; i < 4; ++i) {
    r.c[static_cast<size_t>(i)] = p[static_cast<size_t>(i)];
    r.c[static_cast<size_t>(i + 4)] = q[static_cast<size_t>(i)];
  }
  return r;
}

// Basis identification {1, j, delta, eps, l, jl, deltal, epsl} ->
// {1, j, e lambda, d lambda, d, e, j lambda, lambda}, as indices into the
// QuatOct basis order {1, j, d, e, lambda, j lambda, d lambda, e lambda}.
constexpr int kIsoIndex[8] = {0, 1, 7, 6, 2, 3, 5, 4};

QuatOct to_quat_presentation(const Octonion& a) {
  QuatOct r;
  for (int i = 0; i < 8; ++i)
    r.c[static_cast<size_t>(kIsoIndex[i])] = a.c[static_cast<size_t>(i)];
  return r;
}

Octonion from_quat_presentation(const QuatOct& a) {
  Octonion r;
  for (int i = 0; i < 8; ++i)
    r.c[static_cast<size_t>(i)] = a.c[static_cast<size_t>(kIsoIndex[i])];
  return r;
}

}  // namespace

// ------------------------------------------------------------------ Octonion

Octonion Octonion::operator+(const Octonion& o) const {
  Octonion r;
  for (size_t i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}
Octonion Octonion::operator-(const Octonion& o) const {
  Octonion r;
  for (size_t i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}
Octonion Octonion::operator*(const Scalar& s) const {
  Octonion r;
  for (size_t i = 0; i < 8; ++i) r.c[i] = c[i] * s;
  return r;
}
Octonion Octonion::conj() const {
  Octonion r;
  r.c[0] = c[0];
  for (size_t i = 1; i < 8; ++i) r.c[i] = -c[i];
  return r;
}

std::string Octonion::str() const {
  static const char* names[8] = {"1", "j", "delta", "eps", "l", "jl", "deltal", "epsl"};
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < 8; ++i) {
    if (c[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c[i].str() << ")*" << names[i];
    first = false;
  }
  return first ? "0" : os.str();
}

Octonion mul(const Octonion& a, const Octonion& b) {
  // Split Cayley-Dickson with l = (0, 1), l^2 = -1:
  //   (x1, y1)(x2, y2) = (x1 x2 - conj(y2) y1, y2 x1 + y1 conj(x2)).
  const Quat x1{a.c[0], a.c[1], a.c[2], a.c[3]};
  const Quat y1{a.c[4], a.c[5], a.c[6], a.c[7]};
  const Quat x2{b.c[0], b.c[1], b.c[2], b.c[3]};
  const Quat y2{b.c[4], b.c[5], b.c[6], b.c[7]};
  const Quat p = qsub(qmul(x1, x2, kSplitTable), qmul(qconj(y2), y1, kSplitTable));
  const Quat q = qadd(qmul(y2, x1, kSplitTable), qmul(y1, qconj(x2), kSplitTable));
  Octonion r;
  for (int i = 0; i < 4; ++i) {
    r.c[static_cast<size_t>(i)] = p[static_cast<size_t>(i)];
    r.c[static_cast<size_t>(i + 4)] = q[static_cast<size_t>(i)];
  }
  return r;
}

Octonion mul_via_quaternions(const Octonion& a, const Octonion& b) {
  return from_quat_presentation(
      qo_mul(to_quat_presentation(a), to_quat_presentation(b)));
}

// --------------------------------------------------------------------- ImVec

ImVec ImVec::operator+(const ImVec& o) const {
  ImVec r;
  for (size_t i = 0; i < 7; ++i) r.v[i] = v[i] + o.v[i];
  return r;
}
ImVec ImVec::operator-(const ImVec& o) const {
  ImVec r;
  for (size_t i = 0; i < 7; ++i) r.v[i] = v[i] - o.v[i];
  return r;
}
ImVec ImVec::operator*(const Scalar& s) const {
  ImVec r;
  for (size_t i = 0; i < 7; ++i) r.v[i] = v[i] * s;
  return r;
}
bool ImVec::is_zero() const {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}
bool ImVec::is_real() const {
  for (const Scalar& s : v)
    if (!s.is_real()) return false;
  return true;
}
Octonion ImVec::embed() const {
  Octonion o;
  for (size_t i = 0; i < 7; ++i) o.c[i + 1] = v[i];
  return o;
}

ImVec cross(const ImVec& a, const ImVec& b) {
  const Octonion p = mul(a.embed(), b.embed());
  ImVec r;
  for (size_t i = 0; i < 7; ++i) r.v[i] = p.c[i + 1];
  return r;
}

Scalar inner(const ImVec& a, const ImVec& b) {
  return mul(a.embed(), b.embed()).re();
}

Scalar quad(const ImVec& a) { return inner(a, a); }

Scalar omega(const ImVec& a, const ImVec& b, const ImVec& c) {
  return inner(cross(a, b), c);
}

// ------------------------------------------------------------------- f-basis

std::array<ImVec, 7> f_basis() {
  const Scalar h = Scalar::inv_sqrt2();
  const Scalar ih = Scalar::i() * h;
  std::array<ImVec, 7> f;
  // r-basis indices: 0=j, 1=delta, 2=eps, 3=l, 4=jl, 5=deltal, 6=epsl.
  f[0].v[5] = h;   f[0].v[6] = ih;          // f_-3 = (deltal + i epsl)/sqrt2
  f[1].v[3] = h;   f[1].v[4] = ih;          // f_-2 = (l + i jl)/sqrt2
  f[2].v[1] = h;   f[2].v[2] = ih;          // f_-1 = (delta + i eps)/sqrt2
  f[3].v[0] = Scalar(1);                    // f_0  = j
  f[4].v[1] = h;   f[4].v[2] = -ih;         // f_1  = (delta - i eps)/sqrt2
  f[5].v[3] = h;   f[5].v[4] = -ih;         // f_2  = (l - i jl)/sqrt2
  f[6].v[5] = h;   f[6].v[6] = -ih;         // f_3  = (deltal - i epsl)/sqrt2
  return f;
}

const Matrix& f_change_of_basis() {
  static const Matrix p = [] {
    const auto f = f_basis();
    Matrix m(7, 7);
    for (int col = 0; col < 7; ++col)
      for (int row = 0; row < 7; ++row)
        m(row, col) = f[static_cast<size_t>(col)].v[static_cast<size_t>(row)];
    return m;
  }();
  return p;
}

const Matrix& f_change_of_basis_inv() {
  static const Matrix pinv = [] {
    auto sol = f_change_of_basis().solve(Matrix::identity(7));
    if (!sol) throw std::logic_error("f-basis not invertible");
    return *sol;
  }();
  return pinv;
}

std::array<Scalar, 7> to_f_coords(const ImVec& z) {
  const Matrix& pinv = f_change_of_basis_inv();
  std::array<Scalar, 7> out{};
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k)
      out[static_cast<size_t>(i)] += pinv(i, k) * z.v[static_cast<size_t>(k)];
  return out;
}

ImVec from_f_coords(const std::array<Scalar, 7>& c) {
  const auto f = f_basis();
  ImVec z;
  for (size_t k = 0; k < 7; ++k) z = z + f[k] * c[k];
  return z;
}

std::array<std::array<std::array<Scalar, 7>, 7>, 7> f_mult_table() {
  const auto f = f_basis();
  std::array<std::array<std::array<Scalar, 7>, 7>, 7> t{};
  for (size_t a = 0; a < 7; ++a)
    for (size_t b = 0; b < 7; ++b) t[a][b] = to_f_coords(cross(f[a], f[b]));
  return t;
}

std::array<std::array<std::array<Scalar, 7>, 7>, 7> f_mult_table_reference() {
  // Frozen from the published table, read as (row) x (column).  The published
  // header says "col x row", but the row-by-column reading is the one
  // consistent with the published diagonal matrix of J_{f0} = f0 x (.).
  std::array<std::array<std::array<Scalar, 7>, 7>, 7> t{};
  const Scalar I = Scalar::i();
  const Scalar S = Scalar::sqrt2();
  // set(a, b, coefficient, target): f_a x f_b = coefficient * f_target, with
  // subscripts in -3..3.
  auto set = [&](int a, int b, const Scalar& coef, int target) {
    t[static_cast<size_t>(a + 3)][static_cast<size_t>(b + 3)]
     [static_cast<size_t>(target + 3)] = coef;
  };
  set(-3, 0, -I, -3);  set(-3, 1, -S, -2);  set(-3, 2, -S, -1);  set(-3, 3, -I, 0);
  set(-2, -1, -S, -3); set(-2, 0, I, -2);   set(-2, 2, -I, 0);   set(-2, 3, S, 1);
  set(-1, -2, S, -3);  set(-1, 0, I, -1);   set(-1, 1, I, 0);    set(-1, 3, S, 2);
  set(0, -3, I, -3);   set(0, -2, -I, -2);  set(0, -1, -I, -1);
  set(0, 1, I, 1);     set(0, 2, I, 2);     set(0, 3, -I, 3);
  set(1, -3, S, -2);   set(1, -1, -I, 0);   set(1, 0, -I, 1);    set(1, 2, S, 3);
  set(2, -3, S, -1);   set(2, -2, I, 0);    set(2, 0, -I, 2);    set(2, 1, -S, 3);
  set(3, -3, I, 0);    set(3, -2, -S, 1);   set(3, -1, -S, 2);   set(3, 0, I, 3);
  return t;
}

Matrix q_gram_f() {
  const auto f = f_basis();
  Matrix g(7, 7);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      g(a, b) = inner(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)]);
  return g;
}

Matrix j_f0_matrix() {
  const auto f = f_basis();
  Matrix m(7, 7);
  for (int b = 0; b < 7; ++b) {
    const auto col = to_f_coords(cross(f[3], f[static_cast<size_t>(b)]));
    for (int a = 0; a < 7; ++a) m(a, b) = col[static_cast<size_t>(a)];
  }
  return m;
}

Matrix q_gram_r() {
  Matrix g(7, 7);
  const int diag[7] = {-1, 1, 1, -1, -1, 1, 1};
  for (int i = 0; i < 7; ++i) g(i, i) = Scalar(diag[i]);
  return g;
}

ImVec random_imvec(std::uint64_t& state) {
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  ImVec z;
  for (size_t i = 0; i < 7; ++i) {
    const long num = static_cast<long>(next() % 9) - 4;
    const long den = static_cast<long>(next() % 3) + 1;
    z.v[i] = Scalar::frac(num, den);
  }
  return z;
}

// -------------------------------------------------------------- certificate

certify::Certificate algebra_certificate() {
  certify::Certificate cert;
  cert.title = "split-octonion algebra certificate";

  // Two presentations agree on all 64 basis products.
  {
    bool ok = true;
    std::string bad;
    for (int a = 0; a < 8 && ok; ++a)
      for (int b = 0; b < 8; ++b) {
        const Octonion x = Octonion::unit(a), y = Octonion::unit(b);
        if (!(mul(x, y) == mul_via_quaternions(x, y))) {
          ok = false;
          bad = x.str() + " * " + y.str();
          break;
        }
      }
    cert.add("two-presentation agreement (64 basis pairs)", ok, bad);
  }

  // Squares of the two Cayley-Dickson units.
  {
    Octonion l = Octonion::unit(4), epsl = Octonion::unit(7);
    Octonion l2 = mul(l, l), e2 = mul(epsl, epsl);
    Octonion minus_one, one;
    minus_one.c[0] = Scalar(-1);
    one.c[0] = Scalar(1);
    cert.add("l^2 = -1 and (eps l)^2 = +1", l2 == minus_one && e2 == one);
  }

  // Nonassociativity witness: (j delta) l = eps l but j (delta l) = -eps l.
  {
    const Octonion j = Octonion::unit(1), delta = Octonion::unit(2),
                   l = Octonion::unit(4), epsl = Octonion::unit(7);
    const Octonion lhs = mul(mul(j, delta), l);
    const Octonion rhs = mul(j, mul(delta, l));
    cert.add("nonassociativity witness (j delta) l = eps l != j (delta l)",
             lhs == epsl && rhs == epsl * Scalar(-1),
             lhs.str() + " vs " + rhs.str());
  }

  // Alternativity / two-generator associativity on a seeded sweep.
  {
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    bool ok = true;
    for (int trial = 0; trial < 24 && ok; ++trial) {
      Octonion z1 = random_imvec(seed).embed();
      Octonion z2 = random_imvec(seed).embed();
      z1.c[0] = Scalar::frac(static_cast<long>(trial) - 11, 3);
      z2.c[0] = Scalar::frac(static_cast<long>(trial % 5) - 2, 2);
      ok = mul(z1, mul(z1, z2)) == mul(mul(z1, z1), z2) &&
           mul(mul(z2, z1), z1) == mul(z2, mul(z1, z1));
    }
    cert.add("two-generator associativity z1(z1 z2) = (z1 z1)z2 (seeded sweep)", ok);
  }

  // Conjugation anti-homomorphism on imaginary elements.
  {
    std::uint64_t seed = 0xdeadbeefULL;
    bool ok = true;
    for (int trial = 0; trial < 16 && ok; ++trial) {
      const Octonion z1 = random_imvec(seed).embed();
      const Octonion z2 = random_imvec(seed).embed();
      ok = mul(z1, z2).conj() == mul(z2.conj(), z1.conj());
    }
    cert.add("conj(z1 z2) = conj(z2) conj(z1) (seeded sweep)", ok);
  }

  // Orthonormality and signature of the r-basis.
  {
    bool ok = true;
    const Matrix expected = q_gram_r();
    Matrix g(7, 7);
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b)
        g(a, b) = inner(ImVec::unit(a), ImVec::unit(b));
    ok = (g == expected);
    const auto in = exact::symmetric_inertia(g);
    ok = ok && in.positive == 4 && in.negative == 3 && in.zero == 0;
    cert.add("r-basis orthonormal, q signature (4,3)", ok);
  }

  // Orthogonality criterion: z1 perp z2 iff z1 x z2 = z1 z2.
  {
    std::uint64_t seed = 0x12345ULL;
    bool ok = true;
    for (int trial = 0; trial < 16 && ok; ++trial) {
      ImVec z1 = random_imvec(seed);
      ImVec z2 = random_imvec(seed);
      // Project z2 to the orthogonal complement of z1 (when q(z1) != 0).
      const Scalar q1 = quad(z1);
      if (q1.is_zero()) continue;
      z2 = z2 - z1 * (inner(z1, z2) / q1);
      const Octonion prod = mul(z1.embed(), z2.embed());
      ok = prod.re().is_zero();  // product purely imaginary <=> x equals product
    }
    cert.add("orthogonal elements multiply into Im (cross = product)", ok);
  }

  // Splitting Im(H') + H': orthogonal, signatures (2,1) and (2,2), closure.
  {
    Matrix g1(3, 3), g2(4, 4);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) g1(a, b) = inner(ImVec::unit(a), ImVec::unit(b));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        g2(a, b) = inner(ImVec::unit(a + 3), ImVec::unit(b + 3));
    const auto i1 = exact::symmetric_inertia(g1);
    const auto i2 = exact::symmetric_inertia(g2);
    bool ok = i1.positive == 2 && i1.negative == 1 && i2.positive == 2 &&
              i2.negative == 2;
    // Closure of the cross product with respect to the splitting.
    auto in_imh = [](const ImVec& z) {
      return z.v[3].is_zero() && z.v[4].is_zero() && z.v[5].is_zero() &&
             z.v[6].is_zero();
    };
    auto in_h = [](const ImVec& z) {
      return z.v[0].is_zero() && z.v[1].is_zero() && z.v[2].is_zero();
    };
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = 0; b < 3; ++b)
        if (!in_imh(cross(ImVec::unit(a), ImVec::unit(b)))) { ok = false; break; }
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = 3; b < 7; ++b)
        if (!in_h(cross(ImVec::unit(a), ImVec::unit(b)))) { ok = false; break; }
    for (int a = 3; a < 7 && ok; ++a)
      for (int b = 3; b < 7; ++b)
        if (!in_imh(cross(ImVec::unit(a), ImVec::unit(b)))) { ok = false; break; }
    cert.add("splitting Im(H')+H': signatures (2,1),(2,2) and cross closure", ok);
  }

  // Quaternion-presentation splitting signatures (0,3) and (4,0).
  {
    // Im(H) = span(j, l, jl), H = span(delta, eps, deltal, epsl).
    const int imh_idx[3] = {0, 3, 4};
    const int h_idx[4] = {1, 2, 5, 6};
    Matrix g1(3, 3), g2(4, 4);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        g1(a, b) = inner(ImVec::unit(imh_idx[a]), ImVec::unit(imh_idx[b]));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        g2(a, b) = inner(ImVec::unit(h_idx[a]), ImVec::unit(h_idx[b]));
    const auto i1 = exact::symmetric_inertia(g1);
    const auto i2 = exact::symmetric_inertia(g2);
    cert.add("definite-quaternion splitting signatures (0,3) and (4,0)",
             i1.positive == 0 && i1.negative == 3 && i2.positive == 4 &&
                 i2.negative == 0);
  }

  // Stabilizer identities j = l x jl, delta = l x deltal, eps = l x epsl.
  {
    const ImVec l = ImVec::unit(3);
    bool ok = cross(l, ImVec::unit(4)) == ImVec::unit(0) &&
              cross(l, ImVec::unit(5)) == ImVec::unit(1) &&
              cross(l, ImVec::unit(6)) == ImVec::unit(2);
    cert.add("j = l x jl, delta = l x deltal, eps = l x epsl", ok);
  }

  // f-basis multiplication table: all 49 entries against the frozen table.
  {
    const auto computed = f_mult_table();
    const auto ref = f_mult_table_reference();
    int mismatches = 0, nonzero = 0;
    for (size_t a = 0; a < 7; ++a)
      for (size_t b = 0; b < 7; ++b) {
        bool entry_zero = true;
        for (size_t k = 0; k < 7; ++k) {
          if (!(computed[a][b][k] == ref[a][b][k])) ++mismatches;
          if (!ref[a][b][k].is_zero()) entry_zero = false;
        }
        if (!entry_zero) ++nonzero;
      }
    std::ostringstream os;
    os << nonzero << " nonzero among the 42 off-diagonal entries; published "
       << "header reads 'col x row' but the table is the row-by-column "
       << "product (fixed by the J_{f0} row)";
    cert.add("f-basis multiplication table (42 off-diagonal entries)",
             mismatches == 0 && nonzero == 30, os.str());
  }

  // q and J_{f0} in the f-basis.
  {
    Matrix qf_expected(7, 7);
    const int anti[7] = {1, -1, 1, -1, 1, -1, 1};
    for (int a = 0; a < 7; ++a) qf_expected(a, 6 - a) = Scalar(anti[a]);
    Matrix j_expected(7, 7);
    const int jd[7] = {1, -1, -1, 0, 1, 1, -1};
    for (int a = 0; a < 7; ++a) j_expected(a, a) = Scalar(jd[a]) * Scalar::i();
    cert.add("f-basis Gram of q is the alternating antidiagonal",
             q_gram_f() == qf_expected);
    cert.add("J_{f0} is diag(i,-i,-i,0,i,i,-i) in the f-basis",
             j_f0_matrix() == j_expected);
  }

  // J_z^2 = -Id on z-perp for q(z) = -1 (z = j = f_0).
  {
    const ImVec j = ImVec::unit(0);
    bool ok = quad(j) == Scalar(-1) && cross(j, j).is_zero();
    for (int b = 1; b < 7 && ok; ++b) {
      const ImVec w = ImVec::unit(b);
      ok = cross(j, cross(j, w)) == w * Scalar(-1);
    }
    cert.add("J_j^2 = -Id on the orthogonal complement of j", ok);
  }

  // Distinguished 3-form values.
  {
    const auto f = f_basis();
    const Scalar om1 = omega(ImVec::unit(0), ImVec::unit(1), ImVec::unit(2));
    const Scalar om2 = omega(f[0], f[4], f[5]);  // Omega(f_-3, f_1, f_2)
    cert.add("Omega(j, delta, eps) = 1", om1 == Scalar(1), om1.str());
    cert.add("Omega(f_-3, f_1, f_2) = sqrt2", om2 == Scalar::sqrt2(), om2.str());
  }

  // Omega on the distinguished isotropic 3-plane span(j-eps, l+deltal, jl+epsl).
  {
    const ImVec a = ImVec::unit(0) - ImVec::unit(2);
    const ImVec b = ImVec::unit(3) + ImVec::unit(5);
    const ImVec c = ImVec::unit(4) + ImVec::unit(6);
    bool iso = quad(a).is_zero() && quad(b).is_zero() && quad(c).is_zero() &&
               inner(a, b).is_zero() && inner(a, c).is_zero() &&
               inner(b, c).is_zero();
    const Scalar om = omega(a, b, c);
    cert.add("isotropic 3-plane (j-eps, l+deltal, jl+epsl): Omega = -4",
             iso && om == Scalar(-4), om.str());
  }

  // Printed 3-form expansion and volume normalization.
  {
    using forms::Form;
    Form om(3);
    for (const auto& t : Form::tuples(3))
      om.coeff(t) = omega(ImVec::unit(t[0]), ImVec::unit(t[1]), ImVec::unit(t[2]));
    // Published coefficient pattern (on r-basis index triples, 0-based):
    // 6 [ r1(r2 r3 - r4 r5 - r6 r7) + r2(r4 r6 + r5 r7) + r3(r4 r7 - r5 r6) ].
    struct Ent { int a, b, c, s; };
    const Ent pattern[] = {{0, 1, 2, 1}, {0, 3, 4, -1}, {0, 5, 6, -1},
                           {1, 3, 5, 1}, {1, 4, 6, 1},  {2, 3, 6, 1},
                           {2, 4, 5, -1}};
    bool ok = true;
    for (const auto& t : Form::tuples(3)) {
      Scalar expect;
      for (const Ent& e : pattern)
        if (t[0] == e.a && t[1] == e.b && t[2] == e.c) expect = Scalar(e.s);
      if (!(om.coeff(t) == expect)) { ok = false; break; }
    }
    cert.add("3-form expansion matches published pattern "
             "(determinant convention = printed/6; factor 3! is the "
             "permutation-sum convention)", ok);

    // vol is pinned by <z1,z2> vol = i_{z1}Omega ^ i_{z2}Omega ^ Omega.
    // Solve for its single coefficient from (z1, z2) = (delta, delta) and
    // verify the identity for all 49 basis pairs.
    const Form top = om.contract(ImVec::unit(1).v)
                         .wedge(om.contract(ImVec::unit(1).v))
                         .wedge(om);
    const Scalar vol_coeff = top.raw()[0];  // since <delta, delta> = 1
    bool id_ok = true;
    for (int a = 0; a < 7 && id_ok; ++a)
      for (int b = 0; b < 7; ++b) {
        const Form t2 = om.contract(ImVec::unit(a).v)
                            .wedge(om.contract(ImVec::unit(b).v))
                            .wedge(om);
        if (!(t2.raw()[0] ==
              inner(ImVec::unit(a), ImVec::unit(b)) * vol_coeff)) {
          id_ok = false;
          break;
        }
      }
    // In the determinant convention the coefficient is -6; the published
    // -1/144 differs by the factor 864 absorbed by the permutation-sum wedge
    // normalization (6 from Omega's printed factor 3!, 144 from the 7-form
    // normalization).
    cert.add("volume form: contraction identity on 49 pairs; determinant-"
             "convention coefficient -6 (published -1/144, ratio 864 from "
             "wedge normalization)",
             id_ok && vol_coeff == Scalar(-6), vol_coeff.str());
  }

  // Omega total antisymmetry on seeded random triples.
  {
    std::uint64_t seed = 0xabcdefULL;
    bool ok = true;
    for (int trial = 0; trial < 8 && ok; ++trial) {
      const ImVec a = random_imvec(seed), b = random_imvec(seed),
                  c = random_imvec(seed);
      ok = omega(a, b, c) == -omega(b, a, c) && omega(a, b, c) == -omega(a, c, b) &&
           omega(a, b, c) == omega(b, c, a);
    }
    cert.add("Omega totally antisymmetric (seeded sweep)", ok);
  }

  return cert;
}

}  // namespace g2oct::oct
