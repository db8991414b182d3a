#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jacobi/designs.hpp"
#include "jacobi/enums.hpp"
#include "jacobi/gf2.hpp"
#include "jacobi/mpoly.hpp"

namespace jacobi {

// Genus-g MacWilliams transform for single-block polynomials: substitutes
// y_a -> sum_b (-1)^{a.b} y_b and x_a -> sum_b (-1)^{a.b} x_b, then scales by
// 1/2^(g*dim_c) = 1/|C|^g. Applied to the (Jacobi) enumerator of a code of
// dimension dim_c it yields the corresponding enumerator of the dual code.
MPoly macwilliams(const MPoly& p, int g, int dim_c);

// Blockwise MacWilliams transform for polynomials over blocks 1..ell, with
// one global 1/2^(g*dim_c) scale.
MPoly split_macwilliams(const MPoly& p, int g, int ell, int dim_c);

// The polarization operator: sum_a y_a d/dx_a over the 2^g genus-g labels
// (block 1, no normalization). Raises y-degree by 1, preserves total degree.
MPoly polarize(const MPoly& p, int g);

// Block-k polarization operator with its 1/v_k normalization built in:
// (1/v_k) * sum_a y_{k,a} d/dx_{k,a}.
MPoly polarize_split(const MPoly& p, int g, int ell, int k, int v_k);

// Outcome of verifying one identity on one code, serializable as JSON.
struct CheckReport {
  std::string theorem;     // identity label, e.g. "macwilliams-dual"
  std::string code;        // canonical generator-matrix text of the code
  std::string parameters;  // human-readable parameter summary
  bool applicable = true;  // hypotheses of the identity verified to hold
  bool verdict = false;    // both sides agreed exactly
  std::string witness;     // first mismatching term, empty on agreement
  std::string to_json() const;
};

// Verifies macwilliams(J_{C,T}) == J_{C_dual,T} with the right side
// enumerated independently from the dual code.
CheckReport check_macwilliams(const BinaryCode& C, const std::vector<int>& T,
                              int g, const EnumOptions& opt = {});

// Split analogue over a partition; T[i] is a subset of block i+1.
CheckReport check_split_macwilliams(const BinaryCode& C,
                                    const BlockPartition& P,
                                    const std::vector<std::vector<int>>& T,
                                    int g, const EnumOptions& opt = {});

// Verifies that (1/n) sum_a dW/dx_a equals the weight enumerator of the
// punctured code. Applicable when puncturing is coordinate-independent
// (C-i is one code for all i); otherwise the report compares against the
// average of the punctured enumerators, which the derivative sum always
// equals, and flags the identity's hypothesis as failed.
CheckReport check_derivative_puncture(const BinaryCode& C, int g,
                                      const EnumOptions& opt = {});

// Verifies J_{C,[s]} = A^s W / (n(n-1)...(n-s+1)) for s = 1..t, where A is
// the polarization operator. Hypothesis: C is t-homogeneous (verified here
// via the design machinery; reported in `applicable`).
CheckReport check_polarization_chain(const BinaryCode& C, int t, int g,
                                     const EnumOptions& opt = {});

// Split analogue: compares A(l)^{t_l} ... A(1)^{t_1} W_split (operators with
// their 1/v_k normalizations) against the split Jacobi polynomial with T_k =
// the first t_k coordinates of block k. The operator-power normalization
// multiplies 1/v_k per application, which matches the exact identity only
// while every t_k <= 1; beyond that the exact constant is the falling
// factorial 1/(v_k (v_k-1) ... (v_k-t_k+1)). The verdict asserts the
// falling-factorial identity; the report also records how the operator-power
// form compared. Hypotheses: the partitioned homogeneity of order sum(t_k)
// and minimum nonzero weight >= sum(t_k), both verified here.
CheckReport check_split_polarization(const BinaryCode& C,
                                     const BlockPartition& P,
                                     const std::vector<int>& tvec, int g,
                                     const EnumOptions& opt = {});

struct IndependenceReport {
  bool all_equal = false;
  bool exhaustive = false;
  long sets_checked = 0;
  MPoly common;         // value at the first T (the common value on success)
  std::string witness;  // first T whose polynomial differs from the first
  std::string to_json() const;
};

inline constexpr uint64_t kDefaultSeed = 271828182845904523ULL;

// Computes J_{C,T} over all (exhaustive) or `samples` distinct random
// (sampled, deterministic in `seed`) T of size t and reports whether they
// agree. Falls back to exhaustive when C(n,t) <= samples.
IndependenceReport check_t_independence(const BinaryCode& C, int t, int g,
                                        bool exhaustive, long samples = 100,
                                        uint64_t seed = kDefaultSeed,
                                        const EnumOptions& opt = {});

}  // namespace jacobi
