#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jacobi/enums.hpp"
#include "jacobi/gf2.hpp"
#include "jacobi/rat.hpp"

namespace jacobi {

// A deduplicated collection of coordinate subsets of [n] (1-based points,
// stored as 0-based bitmasks, so n <= 62). Blocks arise as supports of
// fixed-weight codewords; duplicate supports collapse to one block.
struct BlockSystem {
  int n = 0;
  std::vector<uint64_t> blocks;  // sorted ascending, unique

  long block_count() const { return static_cast<long>(blocks.size()); }
};

// Blocks filtered by a weight profile over a partition: the blocks are full
// supports u with |supp(u) & X_i| = k[i] for every block X_i of P. Since the
// X_i partition [n], the tuple (supp(u) & X_1, ..., supp(u) & X_l) and the
// full support determine each other, so one mask per block suffices.
struct GeneralizedBlockSystem {
  int n = 0;
  BlockPartition partition;
  std::vector<int> profile;      // k[i] = required weight inside block i+1
  std::vector<uint64_t> blocks;  // sorted ascending, unique

  long block_count() const { return static_cast<long>(blocks.size()); }
};

struct DesignVerdict {
  bool is_design = false;
  Int lambda{0};        // the common count when is_design
  std::string reason;   // precondition failure or mismatch summary
  std::string witness;  // first unequal pair of point sets, with their counts

  // For generalized verdicts: lambda observed for each composition
  // (t_1,...,t_l) of t, in lexicographic composition order. Audit trail for
  // readings that would allow lambda to vary with the composition; the
  // verdict itself demands a single lambda across all of them.
  std::vector<std::pair<std::vector<int>, Int>> per_composition;

  std::string to_json() const;
};

// Per weight class (or weight profile) outcome of a homogeneity check.
struct HomogeneityVerdict {
  bool is_homogeneous = false;
  int t = 0;

  struct ClassReport {
    std::string label;     // "k=4" or "k=(2,2)"
    long block_count = 0;  // deduplicated supports in the class
    bool counted = true;   // false: class size below t, treated as absent
    DesignVerdict verdict;
  };
  std::vector<ClassReport> classes;
  std::string to_json() const;
};

// Deduplicated supports of the weight-k codewords of C.
BlockSystem supports_of_weight(const BinaryCode& C, int k);

// Deduplicated supports of codewords whose weight inside block i of P equals
// kvec[i] for every i.
GeneralizedBlockSystem supports_of_profile(const BinaryCode& C,
                                           const BlockPartition& P,
                                           const std::vector<int>& kvec);

// Counts, for every t-subset of [n] in lexicographic order, the blocks
// containing it; a design iff the count is one constant lambda. Requires all
// blocks to share one size k >= t (otherwise: verdict false with a reason).
// An empty block list is the trivial design with lambda = 0.
DesignVerdict is_t_design(const BlockSystem& B, int t);

// Generalized analogue: for every composition t = t_1 + ... + t_l with
// 0 <= t_i <= profile[i] and every choice of T_i in C(X_i, t_i), counts the
// blocks K with T_i subset of K for all i. A design iff one lambda is common
// to every composition and every choice. With no admissible composition
// (total profile weight < t) the class is vacuous: verdict true, lambda 0.
DesignVerdict is_generalized_t_design(const GeneralizedBlockSystem& B, int t);

// C is t-homogeneous iff for every weight k with codewords, the weight-k
// supports form a t-design. Classes with k < t are reported but not counted
// against homogeneity; weight n (the all-ones support) is trivially a design.
HomogeneityVerdict is_t_homogeneous(const BinaryCode& C, int t);

// l-block analogue over a partition: every realized nonzero weight profile
// (wt_{X_1}(u), ..., wt_{X_l}(u)) must yield a generalized t-design. Profiles
// of total weight < t are reported but not counted.
HomogeneityVerdict is_ell_t_homogeneous(const BinaryCode& C,
                                        const BlockPartition& P, int t);

}  // namespace jacobi
