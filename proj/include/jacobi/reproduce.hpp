#pragma once

#include <string>
#include <vector>

#include "jacobi/enums.hpp"
#include "jacobi/mpoly.hpp"

namespace jacobi {

// One frozen coordinate-set / polynomial pair from the reference listing of
// the ten degree-8 genus-1 Jacobi polynomials of d8+.
struct FrozenBasisPolynomial {
  std::vector<int> set;  // coordinate set T, 1-based
  std::string text;      // polynomial in the library's genus-1 variables
};

// The ten reference polynomials in order of |T| (two sets of size 4). The
// listing they were frozen from prints a stray `z^3` in one size-4 entry;
// the only reading that is a d8+ Jacobi polynomial (and the one stored
// here) takes it as y1^3.
const std::vector<FrozenBasisPolynomial>& frozen_length8_basis();

struct ClaimResult {
  std::string claim;
  bool pass = false;
  std::string detail;  // multi-line human-readable account of the check
};

// Claims accepted by reproduce_claim, in display order.
const std::vector<std::string>& reproduce_claim_names();

// Recomputes the quantity behind one claim from scratch and compares it
// against frozen reference values:
//   thm5.2  genus-1 invariant dimension series + closed form (degree <= 56)
//   thm5.3  genus-2 invariant dimension series + closed form (degree <= 40)
//   table1  transform group orders |G_1| = 192, |G_2| = 92160
//   table3  genus-1 dimension table at degrees 8, 16, 24
//   table4  genus-2 degree-8 basis-by-coordinate-size table (total 10)
//   table5  genus-2 degree-16 table (total 68)
//   table6  genus-2 degree-24 table (total 455)
//   basis-j8  the ten genus-1 degree-8 Jacobi polynomials of d8+ match the
//             frozen listing term for term and span a 10-dimensional space
//   j8-list   prints the ten computed polynomials (pass = listing match)
// Unknown names throw InputError.
ClaimResult reproduce_claim(const std::string& claim,
                            const EnumOptions& opt = {});

}  // namespace jacobi
