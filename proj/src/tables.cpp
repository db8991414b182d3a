#include "jacobi/tables.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jacobi/error.hpp"
#include "jacobi/gf2.hpp"
#include "jacobi/invar.hpp"
#include "jacobi/mpoly.hpp"

namespace jacobi {

// ---------------------------------------------------------------------------
// Coordinate-set fixtures

std::map<int, std::vector<int>> table2_sets() {
  // Even sizes use the plain prefix; odd sizes skip coordinate 2 and run
  // one further. Each automorphism orbit needs only one representative,
  // and these are the representatives the reference counts were computed
  // with.
  std::map<int, std::vector<int>> out;
  for (int m = 6; m <= 18; ++m) {
    std::vector<int> T;
    if (m % 2 == 0) {
      for (int i = 1; i <= m; ++i) T.push_back(i);
    } else {
      T.push_back(1);
      for (int i = 3; i <= m + 1; ++i) T.push_back(i);
    }
    out.emplace(m, std::move(T));
  }
  return out;
}

std::vector<std::vector<int>> length24_t_sets() {
  std::vector<std::vector<int>> out;
  auto prefix = [](int k) {
    std::vector<int> T(static_cast<size_t>(k));
    std::iota(T.begin(), T.end(), 1);
    return T;
  };
  for (int k = 0; k <= 5; ++k) out.push_back(prefix(k));
  auto mid = table2_sets();
  for (int k = 6; k <= 18; ++k) out.push_back(mid.at(k));
  for (int k = 19; k <= 24; ++k) out.push_back(prefix(k));
  return out;
}

std::vector<std::vector<int>> length8_t_sets() {
  return {{},
          {1},
          {1, 2},
          {1, 2, 3},
          {1, 2, 3, 4},
          {1, 2, 3, 5},
          {1, 2, 3, 4, 5},
          {1, 2, 3, 4, 5, 6},
          {1, 2, 3, 4, 5, 6, 7},
          {1, 2, 3, 4, 5, 6, 7, 8}};
}

// ---------------------------------------------------------------------------
// Incremental rank filter
//
// Candidates are admitted one at a time; a candidate counts exactly when
// its coefficient row is independent of the rows already kept, working
// modulo a fixed 62-bit prime. Independence mod p implies independence
// over Q (clear denominators of a putative rational dependency to a
// primitive integer one; it would survive reduction mod p), so every
// increment is sound. The final counts are then re-checked by an exact
// rank computation over the kept candidates.

namespace {

constexpr uint64_t kPrime = 4611686018427387847ULL;  // 2^62 - 57

uint64_t mulmod(uint64_t a, uint64_t b) {
  return uint64_t((unsigned __int128)(a) * b % kPrime);
}

uint64_t powmod(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a) { return powmod(a, kPrime - 2); }

uint64_t rat_mod(const Rat& c) {
  uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), kPrime);
  uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), kPrime);
  if (den == 0)
    throw MathError("rank filter: coefficient denominator divisible by the "
                    "filter prime");
  // mpz_fdiv_ui floors, so a negative numerator already lands on the
  // positive residue.
  return mulmod(num, invmod(den));
}

using SparseRow = std::vector<std::pair<int, uint64_t>>;

struct RowReducer {
  std::map<Monomial, int, MonomialOrder> cols;
  std::vector<SparseRow> rows;  // echelon rows, leading coefficient 1
  std::map<int, int> pivot_row;

  SparseRow to_row(const MPoly& p) {
    SparseRow r;
    r.reserve(p.term_count());
    for (const auto& [mono, c] : p.terms()) {
      uint64_t v = rat_mod(c);
      if (v == 0) continue;
      int col = cols.try_emplace(mono, int(cols.size())).first->second;
      r.emplace_back(col, v);
    }
    std::sort(r.begin(), r.end());
    return r;
  }

  // r -= f * p, both sorted by column.
  static void subtract_scaled(SparseRow& r, uint64_t f, const SparseRow& p) {
    SparseRow out;
    out.reserve(r.size() + p.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
      if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
        out.push_back(r[i++]);
      } else if (i == r.size() || p[j].first < r[i].first) {
        uint64_t v = mulmod(f, p[j].second);
        if (v) out.emplace_back(p[j].first, kPrime - v);
        ++j;
      } else {
        uint64_t v = (r[i].second + kPrime - mulmod(f, p[j].second)) % kPrime;
        if (v) out.emplace_back(r[i].first, v);
        ++i;
        ++j;
      }
    }
    r = std::move(out);
  }

  bool try_add(const MPoly& p) {
    SparseRow r = to_row(p);
    while (!r.empty()) {
      auto it = pivot_row.find(r.front().first);
      if (it == pivot_row.end()) {
        uint64_t inv = invmod(r.front().second);
        for (auto& e : r) e.second = mulmod(e.second, inv);
        pivot_row.emplace(r.front().first, int(rows.size()));
        rows.push_back(std::move(r));
        return true;
      }
      subtract_scaled(r, r.front().second, rows[size_t(it->second)]);
    }
    return false;
  }

  int rank() const { return int(rows.size()); }
};

// ---------------------------------------------------------------------------
// Candidate coordinate sets

std::vector<int> prefix_set(int k) {
  std::vector<int> T(static_cast<size_t>(k));
  std::iota(T.begin(), T.end(), 1);
  return T;
}

// [1..k-1, k+1]: the prefix with its last element bumped, the second
// representative wherever one set per size is not enough.
std::vector<int> bumped_prefix_set(int k) {
  std::vector<int> T = prefix_set(k);
  T.back() = k + 1;
  return T;
}

// [1, 3, 4, ..., k+1]: the odd-size pattern of the mid-range fixtures.
std::vector<int> skip_two_set(int k) {
  std::vector<int> T;
  T.push_back(1);
  for (int i = 3; i <= k + 1; ++i) T.push_back(i);
  return T;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Number of k-subsets of [1..n], saturating at `cap`.
unsigned long long subset_count(int n, int k, unsigned long long cap) {
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * uint64_t(n - k + i) / uint64_t(i);
    if (r >= cap) return cap;
  }
  return r;
}

// Deterministic stream of size-k subsets of [1..n]: the canonical
// representatives first, then seeded pseudorandom sets, never repeating.
struct TSetPool {
  int n, k;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> fixed;
  size_t next_fixed = 0;
  std::mt19937_64 rng;
  unsigned long long total;

  TSetPool(int n_, int k_, uint64_t seed)
      : n(n_), k(k_), rng(seed), total(subset_count(n_, k_, 1u << 20)) {
    auto offer = [&](std::vector<int> T) {
      if (int(T.size()) != k || (k > 0 && T.back() > n)) return;
      if (seen.insert(T).second) fixed.push_back(std::move(T));
    };
    offer(prefix_set(k));
    if (k >= 1) offer(bumped_prefix_set(k));
    if (k >= 2) offer(skip_two_set(k));
    if (n == 24 && k >= 6 && k <= 18) offer(table2_sets().at(k));
  }

  std::optional<std::vector<int>> next() {
    if (next_fixed < fixed.size()) return fixed[next_fixed++];
    if (seen.size() >= total) return std::nullopt;
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    for (int tries = 0; tries < 500; ++tries) {
      std::vector<int> T;
      std::sample(all.begin(), all.end(), std::back_inserter(T), k, rng);
      if (seen.insert(T).second) return T;
    }
    return std::nullopt;
  }
};

std::string set_to_string(const std::vector<int>& T) {
  std::string s = "[";
  for (size_t i = 0; i < T.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(T[i]);
  }
  return s + "]";
}

// Shared y-degree of all terms; polynomials handled here are homogeneous
// in the y variables by construction.
int poly_y_degree(const MPoly& p) {
  int deg = -1;
  for (const auto& [mono, c] : p.terms()) {
    (void)c;
    int d = 0;
    for (const auto& [v, e] : mono.factors)
      if (v.kind == VarKind::Y) d += int(e);
    if (deg < 0) deg = d;
    if (d != deg)
      throw MathError("basis candidate is not homogeneous in the y variables");
  }
  return deg < 0 ? 0 : deg;
}

}  // namespace

// ---------------------------------------------------------------------------
// Genus-1 dimension comparison

namespace {

const Int kGenus1Molien[7] = {10, 40, 130, 283, 513, 883, 1372};
const Int kGenus1Products[7] = {10, 40, 105, 219, 396, 650, 995};

}  // namespace

Genus1Table genus1_dimension_table(int max_n, const EnumOptions& opt) {
  if (max_n < 8 || max_n > 56 || max_n % 8 != 0)
    throw InputError(
        "genus1_dimension_table: max_n must be a multiple of 8 between 8 "
        "and 56");

  const BinaryCode c8 = d_plus(8);
  const BinaryCode c24 = d_plus(24);
  std::vector<MPoly> B8, B24;
  for (const auto& T : length8_t_sets()) B8.push_back(jacobi_poly(c8, T, 1, opt));
  for (const auto& T : length24_t_sets())
    B24.push_back(jacobi_poly(c24, T, 1, opt));

  // Graded parts of the algebra generated by B8: every degree-n monomial
  // in the generators ends in a degree-8 factor, so the degree-n span is
  // spanned by (degree n-8 basis) x B8.
  std::map<int, std::vector<MPoly>> ring;
  {
    RowReducer red;
    for (const auto& p : B8)
      if (red.try_add(p)) ring[8].push_back(p);
  }
  for (int n = 16; n <= max_n; n += 8) {
    RowReducer red;
    auto& dst = ring[n];
    for (const auto& lo : ring[n - 8])
      for (const auto& b : B8) {
        MPoly cand = lo * b;
        if (red.try_add(cand)) dst.push_back(std::move(cand));
      }
  }

  // Same with the 25 length-24 elements adjoined: a top factor is either
  // a degree-8 or a degree-24 generator.
  std::map<int, std::vector<MPoly>> ext;
  ext[8] = ring[8];
  if (max_n >= 16) ext[16] = ring[16];
  for (int n = 24; n <= max_n; n += 8) {
    RowReducer red;
    auto& dst = ext[n];
    for (const auto& lo : ext[n - 8])
      for (const auto& b : B8) {
        MPoly cand = lo * b;
        if (red.try_add(cand)) dst.push_back(std::move(cand));
      }
    if (n == 24) {
      for (const auto& b : B24)
        if (red.try_add(b)) dst.push_back(b);
    } else {
      for (const auto& lo : ext[n - 24])
        for (const auto& b : B24) {
          MPoly cand = lo * b;
          if (red.try_add(cand)) dst.push_back(std::move(cand));
        }
    }
  }

  MatrixGroup G = transform_group(1);
  DimensionSeries series = molien(G, max_n);

  Genus1Table out;
  for (int n = 8; n <= max_n; n += 8) {
    Genus1Row row;
    row.n = n;
    row.molien_dim = series.at(n);
    row.product_dim = Int(int(ring[n].size()));
    row.extended_dim = Int(int(ext[n].size()));
    const int idx = n / 8 - 1;
    row.expected_molien = kGenus1Molien[idx];
    row.expected_product = kGenus1Products[idx];
    row.expected_extended = kGenus1Molien[idx];
    out.all_match = out.all_match && row.match();
    out.rows.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Genus-2 basis tables

namespace {

constexpr int kPlateau = 8;   // consecutive misses before a source gives up
constexpr int kMaxTries = 40;  // hard cap on sets tried per (code, size)

struct LevelResult {
  BasisReport report;
  // Counted polynomials in counting order (classes ascending), paired
  // with report.basis.
  std::vector<MPoly> counted;
};

void fill_expected(BasisReport& rep) {
  switch (rep.n) {
    case 8:
      rep.expected_totals = {1, 1, 1, 1, 2};
      rep.expected_contributions = {{1}, {1}, {1}, {1}, {2}};
      break;
    case 16:
      rep.expected_totals = {1, 1, 3, 3, 5, 5, 6, 6, 8};
      rep.expected_contributions = {{1, 0}, {1, 0}, {2, 1}, {2, 1}, {4, 1},
                                    {4, 1}, {5, 1}, {5, 1}, {7, 1}};
      break;
    case 24:
      rep.expected_totals = {3, 3, 6, 9, 13, 15, 21, 22, 27, 29, 31, 31, 35};
      rep.expected_contributions = {
          {1, 1, 1, 0},  {1, 1, 1, 0},  {3, 2, 1, 0},  {5, 2, 1, 1},
          {8, 3, 1, 1},  {10, 3, 1, 1}, {15, 5, 0, 1}, {16, 5, 0, 1},
          {20, 6, 0, 1}, {22, 6, 0, 1}, {24, 5, 1, 1}, {24, 5, 1, 1},
          {27, 6, 1, 1}};
      break;
    default:
      break;
  }
}

LevelResult run_genus2_level(int level, const EnumOptions& opt) {
  LevelResult res;
  BasisReport& rep = res.report;
  rep.n = level;
  rep.g = 2;
  const int half = level / 2;
  for (int k = 0; k <= half; ++k) rep.t_sizes.push_back(k);
  fill_expected(rep);

  const std::vector<CycloMatrix> gens = transform_group_generators(2);

  // The ten length-8 basis polynomials double as the product generator
  // set at the higher levels.
  const BinaryCode c8 = d_plus(8);
  std::vector<MPoly> b8;
  std::vector<std::string> b8desc;
  for (const auto& T : length8_t_sets()) {
    b8.push_back(jacobi_poly(c8, T, 2, opt));
    b8desc.push_back("J(d8+," + set_to_string(T) + ")");
  }

  // Full lower-level basis for the product source, mirrored to cover the
  // y-heavy classes: swapping the x and y families maps the class-k basis
  // bijectively onto class n-k (it sends the polynomial attached to T to
  // the one attached to the complement of T).
  std::vector<MPoly> lower;
  std::vector<std::string> lowerdesc;
  const bool with_products = level > 8;
  if (level == 16) {
    lower = b8;
    lowerdesc = b8desc;
  } else if (level == 24) {
    LevelResult r16 = run_genus2_level(16, opt);
    if (!r16.report.totals_match)
      throw MathError(
          "level-24 basis build: the level-16 basis does not match its "
          "reference counts");
    lower = r16.counted;
    for (const auto& e : r16.report.basis)
      lowerdesc.push_back(e.source == "products" ? e.descr
                                                 : "J(d16+," + e.descr + ")");
    const size_t first_half = lower.size();
    for (size_t i = 0; i < first_half; ++i) {
      int k = r16.report.basis[i].t_size;
      if (k == 8) continue;  // middle class is its own mirror
      lower.push_back(swap_kinds(lower[i]));
      lowerdesc.push_back("swap(" + lowerdesc[i] + ")");
    }
  }

  struct CodeSource {
    std::string name;
    BinaryCode code;
  };
  std::vector<CodeSource> codes;
  if (level == 8) {
    codes.push_back({"d8+", c8});
  } else if (level == 16) {
    codes.push_back({"d16+", d_plus(16)});
  } else {
    codes.push_back({"d24+", d_plus(24)});
    codes.push_back({"g24", golay24()});
    codes.push_back({"p24", p24_code()});
  }

  if (with_products) rep.sources.push_back("products");
  for (const auto& cs : codes) rep.sources.push_back(cs.name);
  const int nsrc = int(rep.sources.size());
  rep.contributions.assign(size_t(half) + 1, std::vector<int>(size_t(nsrc), 0));
  rep.totals.assign(size_t(half) + 1, 0);

  // Product candidates grouped by y-degree class.
  std::vector<int> lower_ydeg, b8_ydeg;
  for (const auto& p : lower) lower_ydeg.push_back(poly_y_degree(p));
  for (const auto& p : b8) b8_ydeg.push_back(poly_y_degree(p));

  std::vector<std::vector<MPoly>> counted_per_class(size_t(half) + 1);

  auto admit = [&](const MPoly& cand, int k, int src, const std::string& source,
                   const std::string& descr) {
    InvarianceReport inv = check_invariance(cand, gens, 2);
    if (!inv.invariant)
      throw MathError("counted candidate fails the invariance check: " +
                      source + " " + descr +
                      (inv.notes.empty() ? "" : " — " + inv.notes.front()));
    rep.contributions[size_t(k)][size_t(src)] += 1;
    rep.basis.push_back({source, descr, k});
    counted_per_class[size_t(k)].push_back(cand);
    res.counted.push_back(cand);
  };

  for (int k = 0; k <= half; ++k) {
    RowReducer red;
    int src = 0;
    if (with_products) {
      if (level == 16) {
        for (size_t i = 0; i < b8.size(); ++i)
          for (size_t j = i; j < b8.size(); ++j) {
            if (b8_ydeg[i] + b8_ydeg[j] != k) continue;
            MPoly cand = b8[i] * b8[j];
            if (red.try_add(cand))
              admit(cand, k, src, "products",
                    b8desc[i] + " * " + b8desc[j]);
          }
      } else {
        for (size_t i = 0; i < lower.size(); ++i)
          for (size_t j = 0; j < b8.size(); ++j) {
            if (lower_ydeg[i] + b8_ydeg[j] != k) continue;
            MPoly cand = lower[i] * b8[j];
            if (red.try_add(cand))
              admit(cand, k, src, "products",
                    lowerdesc[i] + " * " + b8desc[j]);
          }
      }
      ++src;
    }
    for (const auto& cs : codes) {
      TSetPool pool(cs.code.length(), k,
                    fnv1a(cs.name) ^ (uint64_t(level) << 40) ^
                        (uint64_t(k) << 32) ^ 0x6a09e667f3bcc909ULL);
      int miss = 0, tried = 0;
      while (miss < kPlateau && tried < kMaxTries) {
        auto T = pool.next();
        if (!T) break;
        ++tried;
        MPoly J = jacobi_poly(cs.code, *T, 2, opt);
        if (red.try_add(J)) {
          admit(J, k, src, cs.name, set_to_string(*T));
          miss = 0;
        } else {
          ++miss;
        }
      }
      ++src;
    }
    rep.totals[size_t(k)] = red.rank();
  }

  rep.totals_match = rep.totals == rep.expected_totals;

  // Exact confirmation of every class count over the kept candidates.
  rep.exact_certified = true;
  for (int k = 0; k <= half; ++k) {
    const auto& polys = counted_per_class[size_t(k)];
    if (polys.empty()) continue;
    if (span_dimension(polys) != rep.totals[size_t(k)])
      rep.exact_certified = false;
  }
  rep.invariance_checked = true;

  Int sum = 0;
  for (int k = 0; k < half; ++k) sum += rep.totals[size_t(k)];
  rep.grand_total = 2 * sum + rep.totals[size_t(half)];

  MatrixGroup G = transform_group(2);
  rep.molien_coefficient = molien(G, level).at(level);
  if (rep.grand_total > rep.molien_coefficient)
    throw MathError(
        "genus-2 basis build: counted dimension exceeds the invariant-space "
        "dimension at degree " +
        std::to_string(level));
  rep.grand_matches_molien = rep.grand_total == rep.molien_coefficient;
  return res;
}

}  // namespace

BasisReport genus2_basis_tables(int level, const EnumOptions& opt) {
  if (level != 8 && level != 16 && level != 24)
    throw InputError("genus2_basis_tables: level must be 8, 16 or 24");
  return run_genus2_level(level, opt).report;
}

// ---------------------------------------------------------------------------
// Report emitters

std::string Genus1Table::to_json() const {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["n"] = r.n;
    row["molien_dim"] = r.molien_dim.get_str();
    row["product_dim"] = r.product_dim.get_str();
    row["extended_dim"] = r.extended_dim.get_str();
    row["expected"] = {r.expected_molien.get_str(), r.expected_product.get_str(),
                       r.expected_extended.get_str()};
    row["match"] = r.match();
    j["rows"].push_back(std::move(row));
  }
  j["all_match"] = all_match;
  return j.dump(2);
}

std::string Genus1Table::to_markdown() const {
  std::ostringstream os;
  os << "| n | invariant dim | products of deg-8 basis | with deg-24 basis | "
        "match |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& r : rows)
    os << "| " << r.n << " | " << r.molien_dim.get_str() << " | "
       << r.product_dim.get_str() << " | " << r.extended_dim.get_str() << " | "
       << (r.match() ? "yes" : "NO") << " |\n";
  return os.str();
}

std::string BasisReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["g"] = g;
  j["sources"] = sources;
  j["t_sizes"] = t_sizes;
  j["contributions"] = contributions;
  j["totals"] = totals;
  j["expected_totals"] = expected_totals;
  j["expected_contributions"] = expected_contributions;
  j["totals_match"] = totals_match;
  j["grand_total"] = grand_total.get_str();
  j["molien_coefficient"] = molien_coefficient.get_str();
  j["grand_matches_molien"] = grand_matches_molien;
  j["exact_certified"] = exact_certified;
  j["invariance_checked"] = invariance_checked;
  j["basis"] = nlohmann::json::array();
  for (const auto& e : basis)
    j["basis"].push_back(
        {{"source", e.source}, {"descr", e.descr}, {"t_size", e.t_size}});
  return j.dump(2);
}

std::string BasisReport::to_markdown() const {
  std::ostringstream os;
  os << "| size |";
  for (const auto& s : sources) os << " " << s << " |";
  os << " total | expected |\n|---|";
  for (size_t i = 0; i < sources.size(); ++i) os << "---|";
  os << "---|---|\n";
  for (size_t k = 0; k < t_sizes.size(); ++k) {
    os << "| " << t_sizes[k] << " |";
    for (size_t s = 0; s < sources.size(); ++s)
      os << " " << contributions[k][s] << " |";
    os << " " << totals[k] << " | "
       << (k < expected_totals.size() ? std::to_string(expected_totals[k])
                                      : std::string("-"))
       << " |\n";
  }
  os << "\nfull dimension (mirrored): " << grand_total.get_str()
     << ", invariant-space dimension: " << molien_coefficient.get_str() << " ("
     << (grand_matches_molien ? "match" : "MISMATCH") << ")\n";
  return os.str();
}

}  // namespace jacobi
