#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jacobi/cyclo.hpp"
#include "jacobi/mpoly.hpp"
#include "jacobi/rat.hpp"

namespace jacobi {

namespace detail {
struct GroupStorage;  // opaque closure storage (invar.cpp)
}  // namespace detail

// A finite multiplicative matrix group over Q(z), stored as the deduplicated
// closure of its generators.
//
// `diagonal_copies` records how many identical diagonal blocks of the acting
// matrix each stored element stands for. The level-g transform group acts on
// the 2^(g+1) variables {y_a} + {x_a} through matrices of the form
// diag(U, U); storing the 2^g x 2^g block U once keeps the closure small
// while determining the acting matrix completely.
struct MatrixGroup {
  int m = 0;                // dimension of the stored matrices
  int diagonal_copies = 1;  // identical blocks per acting matrix
  std::vector<CycloMatrix> generators;
  std::shared_ptr<const detail::GroupStorage> storage;

  size_t order() const;
  // i-th element in closure (breadth-first) order; element(0) is identity.
  CycloMatrix element(size_t i) const;
  bool contains(const CycloMatrix& A) const;
};

// Breadth-first closure of `generators` under multiplication, starting from
// the identity. Generators must be square, equal-sized, and invertible (a
// singular generator can never close into a finite matrix group and is
// rejected up front). Throws InputError when the closure exceeds `cap`.
MatrixGroup close_group(const std::vector<CycloMatrix>& generators,
                        size_t cap = 1000000);

// Block generators of the level-g transform group: the Hadamard-type
// transform block, the phase block diag(1, i, 1, i, ...), one permutation
// block for every invertible affine relabeling of F_2^g, and the scalar
// block z*I (z the primitive 8th root of unity). Every acting matrix is
// diag(U, U) with U a product of these blocks.
std::vector<CycloMatrix> transform_group_generators(int g);

// Closure of transform_group_generators(g), tagged with diagonal_copies = 2.
MatrixGroup transform_group(int g, size_t cap = 1000000);

// Coefficient record of a dimension series sum_n (dim_n) t^n.
struct DimensionSeries {
  int D = 0;               // truncation degree, inclusive
  std::vector<Int> coeff;  // size D + 1, index = degree

  Int at(int n) const;
  // Coefficients at degrees 0, step, 2*step, ... up to D, as a flat list.
  std::vector<Int> at_multiples(int step) const;
  // True when every coefficient at a degree not divisible by step is zero.
  bool supported_on_multiples(int step) const;
  std::string to_json() const;
};

// Averaged reciprocal characteristic series
//   (1/|G|) * sum_U 1/det(I - t U)^c,   c = G.diagonal_copies,
// truncated at degree D. Elements are bucketed by characteristic polynomial
// so each distinct series is inverted once. Every coefficient is verified to
// be a nonnegative rational integer; anything else throws MathError (a
// nonrational or fractional coefficient means the closure is wrong).
DimensionSeries molien(const MatrixGroup& G, int D);

struct SeriesCheck {
  bool match = false;
  int first_mismatch = -1;  // degree of first disagreement; -1 when match
  std::string detail;
  std::string to_json() const;
};

// Expands numerator/denominator (dense integer coefficient vectors, index =
// degree; denominator constant term nonzero) as a power series and compares
// with `series` up to its truncation degree.
SeriesCheck molien_closed_form_check(const DimensionSeries& series,
                                     const std::vector<Int>& numerator,
                                     const std::vector<Int>& denominator);

// Dense integer polynomial helpers for building closed-form numerators and
// denominators: product, and the factor 1 - t^k.
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> poly_one_minus_tk(int k);

// The known rational closed form of the dimension series for genus 1 and 2:
//   g = 1:  numerator supported on t^(8k), k = 0..7,
//           denominator (1-t^8)^2 (1-t^24)^2;
//   g = 2:  numerator supported on t^(8k), k = 0..23 (palindromic),
//           denominator (1-t^8)^2 (1-t^24)^4 (1-t^40)^2.
// Other genera throw InputError.
void invariant_series_closed_form(int g, std::vector<Int>& numerator,
                                  std::vector<Int>& denominator);

struct InvarianceReport {
  bool invariant = true;
  std::vector<std::string> notes;  // one entry per failing generator
  std::string to_json() const;
};

// Substitutes every generator into p and compares with p exactly. Each m x m
// generator U acts on the x-family and the y-family of labels 0..m-1 alike:
// x_a -> sum_b U[a][b] x_b, y_a -> sum_b U[a][b] y_b. Invariance under the
// generators implies invariance under the whole generated group. A scalar
// generator z^k * I multiplies every degree-n term by z^(k*n); when that
// factor is not 1 the report spells out the scalar obstruction instead of a
// bare failure.
InvarianceReport check_invariance(const MPoly& p,
                                  const std::vector<CycloMatrix>& generators,
                                  int g);
InvarianceReport check_invariance(const MPoly& p, const MatrixGroup& G, int g);

// Rank over Q of the coefficient matrix (rows = polynomials, columns =
// monomials). Two independent routes: a fast elimination modulo a fixed
// 62-bit prime, then an exact fraction-free integer elimination. The exact
// rank is returned; a disagreement (only possible when the prime divides a
// pivot minor) is logged to stderr.
int span_dimension(const std::vector<MPoly>& polys);

struct IndependenceVerdict {
  bool independent = false;  // true only with a full-rank certificate
  bool certain = false;      // true when proved, not merely sampled
  int rank = 0;              // best Jacobian rank seen
  int trials = 0;
  std::string detail;
  std::string to_json() const;
};

// Jacobian criterion in characteristic zero: evaluates the Jacobian matrix
// d(polys)/d(vars) at `trials` deterministic pseudo-random rational points.
// Full row rank at any sampled point certifies algebraic independence.
// Persistent rank deficiency yields "probably dependent" — deficiency at
// sampled points is not a proof — except when there are more polynomials
// than variables, where dependence is certain.
IndependenceVerdict algebraic_independence(const std::vector<MPoly>& polys,
                                           int trials = 4,
                                           uint64_t seed = 0x9e3779b97f4a7c15ULL);

}  // namespace jacobi
