#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacobi/gf2.hpp"
#include "jacobi/mpoly.hpp"

namespace jacobi {

// Ordered partition [n] = X_1 u ... u X_l into nonempty blocks of 1-based
// coordinates. Block k owns the variables x_{k,a}, y_{k,a}.
struct BlockPartition {
  std::vector<std::vector<int>> blocks;

  static BlockPartition whole(int n);
  // "1-4;5,6;7-8" -> {{1,2,3,4},{5,6},{7,8}}.
  static BlockPartition parse(const std::string& text);

  size_t ell() const { return blocks.size(); }
  // Throws InputError unless the blocks are sorted, disjoint, nonempty and
  // cover [n] exactly.
  void validate(int n) const;
};

struct EnumOptions {
  // Enumeration walks 2^(g*k) message tuples; refuse beyond this exponent.
  int max_gk = 26;
  // Consult and populate the JACOBI_CACHE directory (when the variable is
  // set) for repeat requests.
  bool use_cache = true;
};

// Genus-g weight enumerator: sum over g-tuples of codewords of
// prod_a x_a^{n_a}, where n_a counts coordinates whose column equals the
// label a in F_2^g (first codeword = most significant label bit).
MPoly weight_enumerator(const BinaryCode& C, int g, const EnumOptions& opt = {});

// Genus-g Jacobi polynomial attached to T (1-based coordinates): the
// coordinates in T contribute y variables, the rest x variables.
MPoly jacobi_poly(const BinaryCode& C, const std::vector<int>& T, int g,
                  const EnumOptions& opt = {});

// Split weight enumerator over a partition: block k counts into x_{k,a}.
MPoly split_weight_enumerator(const BinaryCode& C, const BlockPartition& P,
                              int g, const EnumOptions& opt = {});

// Split Jacobi polynomial: T[k] is a subset of block k+1 (1-based coords);
// those coordinates count into y_{k,a}.
MPoly split_jacobi(const BinaryCode& C, const BlockPartition& P,
                   const std::vector<std::vector<int>>& T, int g,
                   const EnumOptions& opt = {});

// The label-a slice polynomial at coordinate i: sum over g-tuples whose
// column at coordinate i equals the label, of the genus-g monomial on the
// remaining n-1 coordinates. Enumerated directly (not read off a Jacobi
// polynomial) so the decomposition identities are genuine cross-checks.
MPoly z_polynomial(const BinaryCode& C, int i, int label, int g,
                   const EnumOptions& opt = {});

// Directory from JACOBI_CACHE, or "" when caching is off.
std::string enum_cache_dir();

}  // namespace jacobi
