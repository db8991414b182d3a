#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jacobi/error.hpp"
#include "jacobi/mpoly.hpp"
#include "jacobi/rat.hpp"

namespace jacobi {

// Element of Q(z) where z = exp(i pi / 4), the primitive 8th root of unity,
// stored on the power basis 1, z, z^2, z^3 with z^4 = -1. This field holds
// every matrix entry the transform groups need: i = z^2, sqrt(2) = z - z^3,
// and the scalar eta8 = z itself.
struct CycloNum {
  Rat c[4];

  CycloNum() : c{0, 0, 0, 0} {}
  CycloNum(long v) : c{Rat(v), 0, 0, 0} {}  // NOLINT: implicit by design
  CycloNum(const Rat& v) : c{v, 0, 0, 0} {}  // NOLINT
  CycloNum(Rat a, Rat b, Rat d, Rat e) : c{a, b, d, e} {}

  static CycloNum zeta(int k);  // z^k for any integer k
  static CycloNum i_unit() { return zeta(2); }
  static CycloNum sqrt2();
  static CycloNum eta8() { return zeta(1); }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }
  std::optional<Rat> to_rational() const {
    if (!is_rational()) return std::nullopt;
    return c[0];
  }

  CycloNum& operator+=(const CycloNum& o) {
    for (int k = 0; k < 4; ++k) c[k] += o.c[k];
    return *this;
  }
  CycloNum& operator-=(const CycloNum& o) {
    for (int k = 0; k < 4; ++k) c[k] -= o.c[k];
    return *this;
  }
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  CycloNum operator-() const { return CycloNum{-c[0], -c[1], -c[2], -c[3]}; }
  CycloNum operator*(const CycloNum& o) const;

  bool operator==(const CycloNum& o) const {
    return c[0] == o.c[0] && c[1] == o.c[1] && c[2] == o.c[2] && c[3] == o.c[3];
  }
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  // Complex conjugation (z -> z^7).
  CycloNum conj() const { return CycloNum{c[0], -c[3], -c[2], -c[1]}; }
  // Galois automorphism z -> z^k for k in {1,3,5,7}.
  CycloNum galois(int k) const;
  // Exact inverse via the full Galois norm; throws on zero.
  CycloNum inverse() const;

  // Human form on the basis 1, i, sqrt2, i*sqrt2, e.g. "1/2 + 1/2*i".
  std::string to_string() const;
  // Canonical key for hashing/bucketing: the four coordinates joined by '|'.
  std::string key() const;
};

CycloNum cyc_pow(CycloNum base, unsigned e);

// Sparse polynomials with cyclotomic coefficients (images of Rat polynomials
// under the complex transform group).
using CycloPoly = MPolyT<CycloNum>;

// Exact narrowing; nullopt if any coefficient has a nonrational part.
std::optional<MPoly> narrow_rational(const CycloPoly& p);
CycloPoly widen(const MPoly& p);

inline CycloPoly substitute_linear_cyclo(
    const MPoly& p, const std::map<VarId, LinearFormT<CycloNum>>& images) {
  return substitute_linear_t<CycloNum, Rat>(p, images);
}
inline CycloPoly substitute_linear_cyclo(
    const CycloPoly& p, const std::map<VarId, LinearFormT<CycloNum>>& images) {
  return substitute_linear_t<CycloNum, CycloNum>(p, images);
}

// --- dense matrices over Q(z) -------------------------------------------------

struct CycloMatrix {
  int n = 0;
  std::vector<CycloNum> a;  // row-major, n*n

  CycloMatrix() = default;
  explicit CycloMatrix(int size) : n(size), a(size_t(size) * size) {}
  static CycloMatrix identity(int size);

  CycloNum& at(int r, int c) { return a[size_t(r) * n + c]; }
  const CycloNum& at(int r, int c) const { return a[size_t(r) * n + c]; }

  CycloMatrix operator*(const CycloMatrix& o) const;
  CycloMatrix operator*(const CycloNum& s) const;
  bool operator==(const CycloMatrix& o) const { return n == o.n && a == o.a; }

  CycloMatrix conj_transpose() const;
  CycloNum trace() const;
  bool is_identity() const;
};

// Coefficients d[0..n] of det(I - t A), computed from the power sums
// tr(A^j) through the Newton recurrences. Exact.
std::vector<CycloNum> det_one_minus_t(const CycloMatrix& A);

// Coefficients 0..D of the reciprocal characteristic series 1/det(I - t A).
std::vector<CycloNum> char_series_inverse(const CycloMatrix& A, int D);

// diag(A, A): doubles a block so it acts on two identical variable families
// at once. Multiplicative: pairing A*B equals pairing A times pairing B.
CycloMatrix block_diagonal_pair(const CycloMatrix& A);

// --- truncated power series ---------------------------------------------------

namespace detail {
inline Rat coef_inverse(const Rat& a) {
  if (a == 0) throw MathError("division by zero rational");
  return 1 / a;
}
inline CycloNum coef_inverse(const CycloNum& a) { return a.inverse(); }
}  // namespace detail

// Product truncated at degree N inclusive.
template <class C>
std::vector<C> series_mul(const std::vector<C>& a, const std::vector<C>& b,
                          int N) {
  std::vector<C> out(size_t(N) + 1, C(0));
  for (size_t i = 0; i < a.size() && int(i) <= N; ++i) {
    if (detail::coef_is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size() && int(i + j) <= N; ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

// Multiplicative inverse truncated at degree N; a[0] must be invertible.
template <class C>
std::vector<C> series_inv(const std::vector<C>& a, int N) {
  if (a.empty()) throw MathError("series inverse of empty polynomial");
  C lead_inv = detail::coef_inverse(a[0]);
  std::vector<C> out(size_t(N) + 1, C(0));
  out[0] = lead_inv;
  for (int k = 1; k <= N; ++k) {
    C acc(0);
    for (size_t j = 1; j < a.size() && int(j) <= k; ++j)
      acc += a[j] * out[k - j];
    out[k] = C(0) - lead_inv * acc;
  }
  return out;
}

// --- transform group generators -----------------------------------------------

// Affine permutation of F_2^g labels: perm[a] = M a + v with invertible M.
struct AffineMap {
  std::vector<uint8_t> perm;
};

// All |GL(g,F_2)| * 2^g affine maps (2 for g=1, 24 for g=2).
std::vector<AffineMap> affine_group(int g);

// ((1+i)/2)^g * ((-1)^{a.b})_{a,b}, the MacWilliams transform block.
CycloMatrix matrix_T(int g);
// diag(1, i, 1, i, ...), the doubly-even phase block.
CycloMatrix matrix_E(int g);
// Permutation block with the 1 of row a in column perm[a].
CycloMatrix matrix_perm(const AffineMap& s);

}  // namespace jacobi
