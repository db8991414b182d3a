#pragma once

#include <map>
#include <string>
#include <vector>

#include "jacobi/enums.hpp"
#include "jacobi/rat.hpp"

namespace jacobi {

// -----------------------------------------------------------------------
// Coordinate-set fixtures
//
// The dimension counts below attach one or more coordinate sets T to each
// size |T|. For highly symmetric codes most sizes need only one
// representative set; the fixtures pin down exactly which sets the
// reference tables were computed with so reruns are reproducible.

// The thirteen mid-size coordinate sets for length-24 codes
// (|T| = 6..18): even sizes use the prefix [1..|T|], odd sizes use
// [1, 3, 4, ..., |T|+1].
std::map<int, std::vector<int>> table2_sets();

// All 25 coordinate sets for the length-24 genus-1 basis: prefixes for
// |T| <= 5 and |T| >= 19 (any single set of those sizes spans the same
// one-dimensional contribution), table2_sets() in between.
std::vector<std::vector<int>> length24_t_sets();

// The ten coordinate sets attached to the length-8 basis: prefixes
// [1..t] for every size, plus the second size-4 representative
// [1, 2, 3, 5] (the two size-4 orbits contribute independently).
std::vector<std::vector<int>> length8_t_sets();

// -----------------------------------------------------------------------
// Genus-1 dimension comparison
//
// For each n = 8, 16, ..., max_n, compares three dimensions:
//   molien_dim   — coefficient of t^n in 1/|G| sum 1/det(1 - t sigma),
//                  the dimension of the degree-n invariant space;
//   product_dim  — dimension of the degree-n part of the algebra
//                  generated by the ten length-8 basis polynomials;
//   extended_dim — the same with the 25 length-24 basis polynomials
//                  adjoined.
// Expected columns carry the reference values (known for n <= 56).

struct Genus1Row {
  int n = 0;
  Int molien_dim = 0;
  Int product_dim = 0;
  Int extended_dim = 0;
  Int expected_molien = 0;
  Int expected_product = 0;
  Int expected_extended = 0;
  bool match() const {
    return molien_dim == expected_molien && product_dim == expected_product &&
           extended_dim == expected_extended;
  }
};

struct Genus1Table {
  std::vector<Genus1Row> rows;
  bool all_match = true;
  std::string to_json() const;
  std::string to_markdown() const;
};

// max_n must be a multiple of 8 with 8 <= max_n <= 56; values above 24
// are supported but long-running. Throws InputError outside that range.
Genus1Table genus1_dimension_table(int max_n = 24, const EnumOptions& opt = {});

// -----------------------------------------------------------------------
// Genus-2 basis tables
//
// Builds the degree-`level` part of the genus-2 invariant space from
// explicit candidates, counting rank increments per |T| class in a fixed
// source order: products of lower-degree basis elements first, then the
// Jacobi polynomials of each new code in turn.  Totals per class are the
// assertion-grade quantities; the per-source split depends on the
// candidate ordering and is reported, not asserted.

struct BasisEntry {
  std::string source;  // "products", "d16+", "d24+", "g24", "p24", "d8+"
  std::string descr;   // human-readable candidate description
  int t_size = 0;      // y-degree class the candidate lives in
};

struct BasisReport {
  int n = 0;
  int g = 2;
  std::vector<int> t_sizes;           // classes computed: 0 .. n/2
  std::vector<std::string> sources;   // column labels, in counting order
  // contributions[class][source] = rank increments from that source.
  std::vector<std::vector<int>> contributions;
  std::vector<int> totals;            // per class; asserted against expected
  std::vector<int> expected_totals;
  bool totals_match = false;
  // Reference per-source splits, where known; reported for comparison only.
  std::vector<std::vector<int>> expected_contributions;
  // Full-space dimension once the |T| <-> n-|T| kind-swap mirror is
  // applied, and the Molien coefficient it must not exceed.
  Int grand_total = 0;
  Int molien_coefficient = 0;
  bool grand_matches_molien = false;
  // Every per-class total re-verified by an exact rank computation over
  // the counted candidates.
  bool exact_certified = false;
  // Every counted candidate passed the invariance check against all
  // group generators before being counted.
  bool invariance_checked = false;
  std::vector<BasisEntry> basis;      // counted candidates, counting order
  std::string to_json() const;
  std::string to_markdown() const;
};

// level must be 8, 16 or 24; level 24 enumerates three length-24 codes
// over 2^24 message pairs per candidate set and is the long-running case
// (set JACOBI_CACHE to make reruns cheap). Throws InputError otherwise.
BasisReport genus2_basis_tables(int level, const EnumOptions& opt = {});

}  // namespace jacobi
