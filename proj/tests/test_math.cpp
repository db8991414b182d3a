// Tests for the design-verification and transform layers. Design counts are
// cross-checked by brute-force incidence counting written directly in the
// tests; MacWilliams images are compared against enumerating the dual code
// from scratch; polarization identities are checked against hand-expanded
// fixtures and against independently enumerated Jacobi polynomials.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <set>
#include <vector>

#include "jacobi/designs.hpp"
#include "jacobi/enums.hpp"
#include "jacobi/error.hpp"
#include "jacobi/gf2.hpp"
#include "jacobi/mpoly.hpp"
#include "jacobi/xform.hpp"

using namespace jacobi;

namespace {

BinaryCode random_code(std::mt19937_64& rng, int n, int k) {
  std::vector<GfVector> rows;
  for (int r = 0; r < k; ++r) {
    GfVector v(n);
    for (int c = 0; c < n; ++c)
      if (rng() & 1) v.set(c, true);
    rows.push_back(std::move(v));
  }
  return BinaryCode(n, rows);
}

// Brute-force: deduplicated supports of weight-k codewords, as bitmasks.
std::set<uint64_t> supports_oracle(const BinaryCode& C, int k) {
  std::set<uint64_t> out;
  for (const GfVector& u : C.codewords())
    if (u.weight() == k && k > 0) out.insert(u.word0());
  return out;
}

// Brute-force: number of blocks containing the given 1-based point set.
long containment_count(const std::set<uint64_t>& blocks,
                       const std::vector<int>& pts) {
  uint64_t mask = 0;
  for (int p : pts) mask |= 1ull << (p - 1);
  long c = 0;
  for (uint64_t b : blocks)
    if ((b & mask) == mask) ++c;
  return c;
}

// All t-subsets of {1..n}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i + 1;
  if (t == 0) return {{}};
  while (true) {
    out.push_back(idx);
    int i = t - 1;
    while (i >= 0 && idx[i] == n - t + 1 + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// A code whose weight-2 words cover coordinates 1..6 but not 7,8 — its
// weight-2 supports cannot form a 1-design.
BinaryCode uneven_code() {
  return BinaryCode::from_text(
      "8 3\n11000000\n00110000\n00001100\n");
}

}  // namespace

TEST_CASE("supports_of_weight matches brute force and frozen counts") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  BlockSystem B4 = supports_of_weight(d8, 4);
  CHECK(B4.block_count() == 14);
  std::set<uint64_t> oracle = supports_oracle(d8, 4);
  CHECK(std::set<uint64_t>(B4.blocks.begin(), B4.blocks.end()) == oracle);

  BinaryCode g24 = BinaryCode::builtin("g24");
  CHECK(supports_of_weight(g24, 8).block_count() == 759);
  CHECK(supports_of_weight(g24, 12).block_count() == 2576);

  // weight 0: the zero codeword's empty support
  BlockSystem B0 = supports_of_weight(d8, 0);
  CHECK(B0.block_count() == 1);
  CHECK(B0.blocks.front() == 0);
}

TEST_CASE("weight-4 supports of d_plus(8) form designs with known lambdas") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  BlockSystem B = supports_of_weight(d8, 4);

  DesignVerdict v3 = is_t_design(B, 3);
  CHECK(v3.is_design);
  CHECK(v3.lambda == 1);

  // Brute-force every 3-subset independently.
  std::set<uint64_t> oracle = supports_oracle(d8, 4);
  for (const auto& sub : subsets(8, 3))
    CHECK(containment_count(oracle, sub) == 1);

  DesignVerdict v2 = is_t_design(B, 2);
  CHECK(v2.is_design);
  CHECK(v2.lambda == 3);
  DesignVerdict v1 = is_t_design(B, 1);
  CHECK(v1.is_design);
  CHECK(v1.lambda == 7);
}

TEST_CASE("weight-8 supports of the Golay code are a 5-design, lambda 1") {
  BinaryCode g24 = BinaryCode::builtin("g24");
  BlockSystem B = supports_of_weight(g24, 8);
  DesignVerdict v5 = is_t_design(B, 5);
  CHECK(v5.is_design);
  CHECK(v5.lambda == 1);

  // Independent count over all C(24,5) = 42504 subsets.
  std::set<uint64_t> oracle = supports_oracle(g24, 8);
  REQUIRE(oracle.size() == 759);
  for (const auto& sub : subsets(24, 5))
    REQUIRE(containment_count(oracle, sub) == 1);

  DesignVerdict v4 = is_t_design(B, 4);
  CHECK(v4.is_design);
  CHECK(v4.lambda == 5);
}

TEST_CASE("complete block system is a design with binomial lambda") {
  BlockSystem B;
  B.n = 6;
  for (const auto& sub : subsets(6, 3)) {
    uint64_t m = 0;
    for (int p : sub) m |= 1ull << (p - 1);
    B.blocks.push_back(m);
  }
  DesignVerdict v = is_t_design(B, 2);
  CHECK(v.is_design);
  CHECK(v.lambda == 4);  // C(6-2, 3-2)
}

TEST_CASE("non-designs produce the lexicographically first witness") {
  BlockSystem B;
  B.n = 3;
  B.blocks = {0b011, 0b101};  // {1,2} and {1,3}
  DesignVerdict v = is_t_design(B, 1);
  CHECK_FALSE(v.is_design);
  CHECK(v.witness.find("{1}") != std::string::npos);
  CHECK(v.witness.find("{2}") != std::string::npos);
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("degenerate block systems") {
  BlockSystem empty;
  empty.n = 5;
  DesignVerdict v = is_t_design(empty, 2);
  CHECK(v.is_design);  // trivial design
  CHECK(v.lambda == 0);

  BlockSystem mixed;
  mixed.n = 4;
  mixed.blocks = {0b0011, 0b0111};
  CHECK_FALSE(is_t_design(mixed, 1).is_design);

  BlockSystem small;
  small.n = 4;
  small.blocks = {0b0011};
  CHECK_FALSE(is_t_design(small, 3).is_design);  // block size below t
}

TEST_CASE("generalized designs over a two-block partition of d_plus(8)") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  BlockPartition P = BlockPartition::parse("1-4;5-8");

  GeneralizedBlockSystem B = supports_of_profile(d8, P, {2, 2});
  // Independent collection of the same class.
  std::set<uint64_t> oracle;
  for (const GfVector& u : d8.codewords()) {
    uint64_t s = u.word0();
    if (std::popcount(s & 0xFull) == 2 && std::popcount(s & 0xF0ull) == 2)
      oracle.insert(s);
  }
  CHECK(std::set<uint64_t>(B.blocks.begin(), B.blocks.end()) == oracle);
  REQUIRE(B.block_count() > 0);

  DesignVerdict v = is_generalized_t_design(B, 1);
  CHECK(v.is_design);
  CHECK(v.lambda == containment_count(oracle, {1}));
  // compositions of t=1 under caps (2,2): (0,1) then (1,0)
  REQUIRE(v.per_composition.size() == 2);
  CHECK(v.per_composition[0].first == std::vector<int>{0, 1});
  CHECK(v.per_composition[1].first == std::vector<int>{1, 0});
  CHECK(v.per_composition[0].second == v.lambda);
  CHECK(v.per_composition[1].second == v.lambda);
}

TEST_CASE("profile caps exclude compositions the class cannot meet") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  BlockPartition P = BlockPartition::parse("1-4;5-8");
  // The {1,2,3,4} support lives alone in profile (4,0); t=1 only admits
  // composition (1,0), and every point of X_1 lies in the one block.
  GeneralizedBlockSystem B = supports_of_profile(d8, P, {4, 0});
  REQUIRE(B.block_count() == 1);
  DesignVerdict v = is_generalized_t_design(B, 1);
  CHECK(v.is_design);
  CHECK(v.lambda == 1);
  REQUIRE(v.per_composition.size() == 1);
  CHECK(v.per_composition[0].first == std::vector<int>{1, 0});
}

TEST_CASE("single-block generalized designs agree with plain designs") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 6; ++trial) {
    BinaryCode C = random_code(rng, 8, 3);
    BlockPartition whole = BlockPartition::whole(8);
    for (const GfVector& u : C.codewords()) {
      if (u.is_zero()) continue;
      int w = u.weight();
      BlockSystem B = supports_of_weight(C, w);
      GeneralizedBlockSystem G = supports_of_profile(C, whole, {w});
      CHECK(B.blocks == G.blocks);
      for (int t = 0; t <= 2; ++t) {
        DesignVerdict a = is_t_design(B, t);
        DesignVerdict b = is_generalized_t_design(G, t);
        if (w < t) continue;  // plain verdict refuses small blocks
        CHECK(a.is_design == b.is_design);
        if (a.is_design && b.is_design) CHECK(a.lambda == b.lambda);
      }
    }
  }
}

TEST_CASE("homogeneity of the named codes") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  HomogeneityVerdict h3 = is_t_homogeneous(d8, 3);
  CHECK(h3.is_homogeneous);
  REQUIRE(h3.classes.size() == 2);  // weights 4 and 8
  CHECK(h3.classes[0].label == "k=4");
  CHECK(h3.classes[0].block_count == 14);
  CHECK(h3.classes[0].counted);
  CHECK(h3.classes[1].label == "k=8");
  CHECK(h3.classes[1].block_count == 1);

  // Not 4-homogeneous: 14 blocks of size 4 cannot share C(8,4) | 14*C(4,4).
  CHECK_FALSE(is_t_homogeneous(d8, 4).is_homogeneous);

  BinaryCode g24 = BinaryCode::builtin("g24");
  CHECK(is_t_homogeneous(g24, 5).is_homogeneous);

  // Weight-2 words covering only part of [8]: not even 1-homogeneous.
  CHECK_FALSE(is_t_homogeneous(uneven_code(), 1).is_homogeneous);

  // Zero code: no nonzero weights, vacuously homogeneous.
  BinaryCode zero = BinaryCode::from_text("4 0\n");
  CHECK(is_t_homogeneous(zero, 2).is_homogeneous);
  CHECK(is_t_homogeneous(zero, 2).classes.empty());
}

TEST_CASE("classes below t are reported but not counted") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  HomogeneityVerdict h5 = is_t_homogeneous(d8, 5);
  REQUIRE(h5.classes.size() == 2);
  CHECK_FALSE(h5.classes[0].counted);  // k=4 < 5
  CHECK(h5.classes[1].counted);        // the all-ones support, trivial design
  CHECK(h5.is_homogeneous);            // vacuous truth, by the absent rule
}

TEST_CASE("block-partition homogeneity agrees with plain at one block") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    BinaryCode C = random_code(rng, 10, 4);
    BlockPartition whole = BlockPartition::whole(10);
    for (int t = 1; t <= 2; ++t)
      CHECK(is_ell_t_homogeneous(C, whole, t).is_homogeneous ==
            is_t_homogeneous(C, t).is_homogeneous);
  }
}

TEST_CASE("verdict JSON carries lambda and composition details") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  DesignVerdict v = is_t_design(supports_of_weight(d8, 4), 3);
  std::string j = v.to_json();
  CHECK(j.find("\"is_design\":true") != std::string::npos);
  CHECK(j.find("\"lambda\":\"1\"") != std::string::npos);
}

// ---------------------------------------------------------------------------
// transforms

TEST_CASE("MacWilliams transform fixes self-dual weight enumerators") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  for (int g = 1; g <= 2; ++g) {
    MPoly W = weight_enumerator(d8, g);
    CHECK(macwilliams(W, g, 4) == W);
  }
}

TEST_CASE("MacWilliams transform of the zero code reaches the full space") {
  BinaryCode zero = BinaryCode::from_text("1 0\n");
  MPoly W = weight_enumerator(zero, 1);
  CHECK(to_string(W) == "x0");
  MPoly full = macwilliams(W, 1, 0);
  CHECK(to_string(full) == "x0 + x1");
}

TEST_CASE("MacWilliams images equal independently enumerated duals") {
  std::mt19937_64 rng(4321);
  // the fixed [6,3] example
  BinaryCode fixed = random_code(rng, 6, 3);
  REQUIRE(fixed.dim() == 3);
  for (int g = 1; g <= 2; ++g)
    for (int t = 0; t <= 2; ++t)
      for (const auto& T : subsets(6, t)) {
        CheckReport r = check_macwilliams(fixed, T, g);
        CHECK(r.verdict);
        CHECK(r.witness.empty());
      }
  // assorted random codes
  for (int trial = 0; trial < 8; ++trial) {
    int n = 2 + int(rng() % 7);
    int k = int(rng() % (uint64_t(n) + 1));
    BinaryCode C = random_code(rng, n, k);
    std::vector<int> T;
    if (n >= 2) T = {1, n};
    for (int g = 1; g <= 2; ++g) CHECK(check_macwilliams(C, T, g).verdict);
  }
}

TEST_CASE("applying the transform twice restores the polynomial") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 3 + int(rng() % 6);
    BinaryCode C = random_code(rng, n, 1 + int(rng() % uint64_t(n)));
    for (int g = 1; g <= 2; ++g) {
      MPoly p = jacobi_poly(C, {1}, g);
      MPoly twice = macwilliams(macwilliams(p, g, C.dim()), g, n - C.dim());
      CHECK(twice == p);
    }
  }
  // the self-dual showcase at n = 8
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  MPoly W = weight_enumerator(d8, 1);
  CHECK(macwilliams(macwilliams(W, 1, 4), 1, 4) == W);
}

TEST_CASE("split MacWilliams agrees with dual split enumeration") {
  std::mt19937_64 rng(2026);
  BinaryCode C = random_code(rng, 6, 3);
  REQUIRE(C.dim() == 3);
  BlockPartition P = BlockPartition::parse("1-3;4-6");
  CheckReport r = check_split_macwilliams(C, P, {{1}, {4}}, 1);
  CHECK(r.verdict);

  // self-dual: empty T, transform fixes the split weight enumerator
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  BlockPartition P8 = BlockPartition::parse("1-4;5-8");
  MPoly W = split_weight_enumerator(d8, P8, 1);
  CHECK(split_macwilliams(W, 1, 2, 4) == W);
}

TEST_CASE("split MacWilliams with one block reduces to the plain transform") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  MPoly J = jacobi_poly(d8, {1}, 1);
  CHECK(split_macwilliams(J, 1, 1, 4) == macwilliams(J, 1, 4));
  // multi-block polynomial through the plain entry point is refused
  BlockPartition P8 = BlockPartition::parse("1-4;5-8");
  MPoly W = split_weight_enumerator(d8, P8, 1);
  CHECK_THROWS_AS(macwilliams(W, 1, 4), InputError);
}

TEST_CASE("polarization operator fixtures") {
  CHECK(polarize(MPoly::constant(Rat(7)), 1).is_zero());
  MPoly p = mpoly_from_string("x0^4*x1^4");
  MPoly expect = mpoly_from_string("4*x0^3*x1^4*y0 + 4*x0^4*x1^3*y1");
  CHECK(polarize(p, 1) == expect);

  // A W = n * J_{C,1} for the 1-homogeneous d_plus(8)
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  MPoly W = weight_enumerator(d8, 1);
  MPoly J1 = jacobi_poly(d8, {1}, 1);
  CHECK(polarize(W, 1) == J1 * Rat(8));
}

TEST_CASE("polarization commutes with simultaneous label permutation") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  MPoly W = weight_enumerator(d8, 2);
  MPoly AW = polarize(W, 2);
  // swap labels 1 and 2 on x and y alike
  auto perm = [](int a) { return a == 1 ? 2 : a == 2 ? 1 : a; };
  std::map<VarId, LinearForm> images;
  for (int a = 0; a < 4; ++a) {
    images[var_x(a)] = LinearForm{{{var_x(perm(a)), Rat(1)}}};
    images[var_y(a)] = LinearForm{{{var_y(perm(a)), Rat(1)}}};
  }
  auto apply = [&](const MPoly& q) {
    std::map<VarId, LinearForm> needed;
    for (VarId v : q.variables()) needed[v] = images[v];
    return substitute_linear(q, needed);
  };
  CHECK(apply(AW) == polarize(apply(W), 2));
}

TEST_CASE("split polarization operator basics") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  // one block: (1/n) * polarize
  MPoly W = weight_enumerator(d8, 1);
  MPoly via_split = polarize_split(W, 1, 1, 1, 8);
  CHECK(via_split == polarize(W, 1) * (Rat(1) / Rat(8)));

  // no x variables in the targeted block: zero
  MPoly pure_y = mpoly_from_string("y0^3");
  CHECK(polarize_split(pure_y, 1, 2, 2, 4).is_zero());

  CHECK_THROWS_AS(polarize_split(W, 1, 2, 3, 4), InputError);
}

TEST_CASE("single-coordinate split polarization identity on d_plus(8)") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  BlockPartition P = BlockPartition::parse("1-4;5-8");
  for (int g = 1; g <= 2; ++g) {
    CheckReport r1 = check_split_polarization(d8, P, {1, 0}, g);
    CHECK(r1.applicable);
    CHECK(r1.verdict);
    CheckReport r2 = check_split_polarization(d8, P, {0, 1}, g);
    CHECK(r2.applicable);
    CHECK(r2.verdict);
  }
}

TEST_CASE("multi-coordinate split polarization needs falling factorials") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  BlockPartition P = BlockPartition::parse("1-4;5-8");

  // At total order 2 the partitioned homogeneity hypothesis fails for
  // d_plus(8): in its (2,2) profile class an X_1-pair lies in 2 blocks but a
  // split pair lies in 3, so no single lambda covers both compositions. The
  // identity's two sides still agree; the report records the failed
  // hypothesis and the agreement separately.
  BlockPartition P22 = P;
  DesignVerdict cls = is_generalized_t_design(
      supports_of_profile(d8, P22, {2, 2}), 2);
  CHECK_FALSE(cls.is_design);
  for (const auto& [comp, lam] : cls.per_composition) {
    if (comp == std::vector<int>{2, 0}) CHECK(lam == 2);
    if (comp == std::vector<int>{1, 1}) CHECK(lam == 3);
  }

  CheckReport mixed = check_split_polarization(d8, P, {1, 1}, 1);
  CHECK_FALSE(mixed.applicable);
  CHECK(mixed.verdict);

  CheckReport twice = check_split_polarization(d8, P, {2, 0}, 1);
  CHECK_FALSE(twice.applicable);
  CHECK(twice.verdict);

  // At total order 3 the hypothesis holds: the cap t_i <= k_i rules the
  // incompatible compositions out of every profile class, and the minimum
  // weight is 4 >= 3. This is the genuine multi-application instance.
  CheckReport chain = check_split_polarization(d8, P, {2, 1}, 1);
  CHECK(chain.applicable);
  CHECK(chain.verdict);
  CHECK(chain.parameters.find("operator-power normalization (1/v_k per "
                              "application) mismatches") !=
        std::string::npos);
  CHECK(chain.parameters.find("falling-factorial normalization matches") !=
        std::string::npos);
  CheckReport chain2 = check_split_polarization(d8, P, {1, 2}, 1);
  CHECK(chain2.applicable);
  CHECK(chain2.verdict);
}

TEST_CASE("derivative sum recovers the punctured weight enumerator") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  for (int g = 1; g <= 2; ++g) {
    CheckReport r = check_derivative_puncture(d8, g);
    // the punctured subspaces differ by coordinate but are permutation
    // images of one [7,4] code, so their enumerators coincide
    CHECK(r.applicable);
    CHECK(r.verdict);
  }

  // equal punctured enumerators by the coordinate-swap symmetry 12 <-> 34
  BinaryCode C = BinaryCode::from_text("4 2\n1100\n0011\n");
  CheckReport r = check_derivative_puncture(C, 1);
  CHECK(r.applicable);
  CHECK(r.verdict);

  // a weight-1 codeword collapses puncturing: hypothesis fails, and the
  // report falls back to the coordinate-deletion average
  BinaryCode W1 = BinaryCode::from_text("3 2\n110\n001\n");
  CheckReport rw = check_derivative_puncture(W1, 1);
  CHECK_FALSE(rw.applicable);
  CHECK(rw.verdict);
  CHECK(rw.witness.find("average") != std::string::npos);
}

TEST_CASE("polarization chain reproduces Jacobi polynomials") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  for (int g = 1; g <= 2; ++g) {
    CheckReport r = check_polarization_chain(d8, 3, g);
    CHECK(r.applicable);
    CHECK(r.verdict);
  }
  BinaryCode g24 = BinaryCode::builtin("g24");
  CheckReport r = check_polarization_chain(g24, 5, 1);
  CHECK(r.applicable);
  CHECK(r.verdict);
}

TEST_CASE("t-independence: exhaustive and sampled") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  long expected[] = {8, 28, 56};
  for (int t = 1; t <= 3; ++t) {
    IndependenceReport r = check_t_independence(d8, t, 1, true);
    CHECK(r.all_equal);
    CHECK(r.exhaustive);
    CHECK(r.sets_checked == expected[t - 1]);
    std::vector<int> T;
    for (int i = 1; i <= t; ++i) T.push_back(i);
    CHECK(r.common == jacobi_poly(d8, T, 1));
  }

  // t = 0: a single empty set
  IndependenceReport r0 = check_t_independence(d8, 0, 1, true);
  CHECK(r0.all_equal);
  CHECK(r0.sets_checked == 1);

  BinaryCode g24 = BinaryCode::builtin("g24");
  IndependenceReport rs = check_t_independence(g24, 5, 1, false, 25);
  CHECK(rs.all_equal);
  CHECK_FALSE(rs.exhaustive);
  CHECK(rs.sets_checked == 25);

  // dependence is detected and witnessed deterministically
  IndependenceReport bad = check_t_independence(uneven_code(), 1, 1, true);
  CHECK_FALSE(bad.all_equal);
  CHECK_FALSE(bad.witness.empty());
  IndependenceReport bad2 = check_t_independence(uneven_code(), 1, 1, true);
  CHECK(bad.witness == bad2.witness);
}

TEST_CASE("check reports serialize to JSON") {
  BinaryCode d8 = BinaryCode::builtin("d_plus(8)");
  CheckReport r = check_macwilliams(d8, {1}, 1);
  std::string j = r.to_json();
  CHECK(j.find("\"theorem\":\"macwilliams-dual\"") != std::string::npos);
  CHECK(j.find("\"verdict\":true") != std::string::npos);
}
