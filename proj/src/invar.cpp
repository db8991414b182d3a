#include "jacobi/invar.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "jacobi/error.hpp"

namespace jacobi {
namespace detail {

// ---------------------------------------------------------------------------
// Compact closure arithmetic.
//
// Every matrix the transform groups produce has entries in (1/2^k) Z[z]
// (z the primitive 8th root of unity): the Hadamard-type block contributes
// powers of (1+i)/2, everything else is a unit times a permutation. Such
// "dyadic" matrices close fast in plain integer arithmetic: an entry is four
// int64 components over a shared power-of-two denominator, normalized by
// stripping common factors of 2. Inputs outside this shape fall back to the
// generic field representation below.

struct DMat {
  int m = 0;
  int den = 0;  // entries are (c0 + c1 z + c2 z^2 + c3 z^3) / 2^den
  std::vector<std::array<int64_t, 4>> e;  // row-major, m*m entries
};

// Post-normalization magnitude bound. Elements of a finite group built from
// unit-modulus dyadic entries stay far below this; blowing past it means the
// generators do not close (the element cap would eventually fire anyway, but
// this catches divergence before int64 overflow could).
constexpr int64_t kComponentBound = int64_t(1) << 20;
constexpr int kDenBound = 40;

void normalize(DMat& A) {
  while (A.den > 0) {
    bool all_even = true;
    for (const auto& en : A.e) {
      if ((en[0] | en[1] | en[2] | en[3]) & 1) {
        all_even = false;
        break;
      }
    }
    if (!all_even) break;
    for (auto& en : A.e)
      for (auto& c : en) c >>= 1;
    --A.den;
  }
  for (const auto& en : A.e)
    for (const auto& c : en)
      if (c > kComponentBound || c < -kComponentBound)
        throw MathError(
            "matrix entries outgrew the dyadic closure bounds; the "
            "generators do not appear to generate a finite group");
  if (A.den > kDenBound)
    throw MathError("matrix denominators outgrew the dyadic closure bounds");
}

DMat dmat_identity(int m) {
  DMat I;
  I.m = m;
  I.e.assign(size_t(m) * m, {0, 0, 0, 0});
  for (int r = 0; r < m; ++r) I.e[size_t(r) * m + r][0] = 1;
  return I;
}

DMat dmat_mul(const DMat& A, const DMat& B) {
  const int m = A.m;
  DMat C;
  C.m = m;
  C.den = A.den + B.den;
  C.e.assign(size_t(m) * m, {0, 0, 0, 0});
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      const auto& a = A.e[size_t(i) * m + k];
      if ((a[0] | a[1] | a[2] | a[3]) == 0) continue;
      for (int j = 0; j < m; ++j) {
        const auto& b = B.e[size_t(k) * m + j];
        if ((b[0] | b[1] | b[2] | b[3]) == 0) continue;
        auto& c = C.e[size_t(i) * m + j];
        // Convolution modulo z^4 = -1.
        c[0] += a[0] * b[0] - a[1] * b[3] - a[2] * b[2] - a[3] * b[1];
        c[1] += a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2];
        c[2] += a[0] * b[2] + a[1] * b[1] + a[2] * b[0] - a[3] * b[3];
        c[3] += a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0];
      }
    }
  normalize(C);
  return C;
}

void append_i32(std::string& s, int64_t v) {
  auto u = uint32_t(int32_t(v));
  s.push_back(char(u & 0xff));
  s.push_back(char((u >> 8) & 0xff));
  s.push_back(char((u >> 16) & 0xff));
  s.push_back(char((u >> 24) & 0xff));
}

std::string dmat_key(const DMat& A) {
  std::string s;
  s.reserve(A.e.size() * 16 + 1);
  s.push_back(char(A.den));
  for (const auto& en : A.e)
    for (const auto& c : en) append_i32(s, c);
  return s;
}

std::optional<DMat> to_dyadic(const CycloMatrix& A) {
  int max_exp = 0;
  for (const CycloNum& z : A.a)
    for (int k = 0; k < 4; ++k) {
      const Int den = z.c[k].get_den();
      if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
      int exp = int(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
      if (exp > kDenBound) return std::nullopt;
      max_exp = std::max(max_exp, exp);
    }
  DMat D;
  D.m = A.n;
  D.den = max_exp;
  D.e.assign(size_t(A.n) * A.n, {0, 0, 0, 0});
  for (size_t idx = 0; idx < A.a.size(); ++idx)
    for (int k = 0; k < 4; ++k) {
      const Rat& q = A.a[idx].c[k];
      int exp = int(mpz_sizeinbase(q.get_den().get_mpz_t(), 2)) - 1;
      Int shifted;
      mpz_mul_2exp(shifted.get_mpz_t(), q.get_num().get_mpz_t(),
                   unsigned(max_exp - exp));
      if (!shifted.fits_slong_p()) return std::nullopt;
      long v = shifted.get_si();
      if (v > kComponentBound || v < -kComponentBound) return std::nullopt;
      D.e[idx][k] = v;
    }
  normalize(D);
  return D;
}

CycloMatrix to_cyclo(const DMat& A) {
  CycloMatrix out(A.m);
  Rat scale = Rat(1) / Rat(Int(1) << A.den);
  for (size_t idx = 0; idx < A.e.size(); ++idx)
    for (int k = 0; k < 4; ++k)
      if (A.e[idx][k] != 0) out.a[idx].c[k] = Rat(long(A.e[idx][k])) * scale;
  return out;
}

std::string cyclo_key(const CycloMatrix& A) {
  std::string s;
  for (const CycloNum& z : A.a) {
    s += z.key();
    s.push_back(';');
  }
  return s;
}

struct GroupStorage {
  bool dyadic = false;
  std::vector<DMat> d;
  std::vector<CycloMatrix> c;
  std::unordered_set<std::string> keys;
  size_t size() const { return dyadic ? d.size() : c.size(); }
};

namespace {

template <class M, class MulFn, class KeyFn>
void bfs_close(std::vector<M>& elems, std::unordered_set<std::string>& seen,
               const std::vector<M>& gens, size_t cap, MulFn mul, KeyFn key) {
  for (size_t head = 0; head < elems.size(); ++head) {
    // Copy: elems may reallocate while we append products.
    M cur = elems[head];
    for (const M& gmat : gens) {
      M prod = mul(cur, gmat);
      std::string k = key(prod);
      if (seen.insert(std::move(k)).second) {
        if (elems.size() >= cap)
          throw InputError("group closure exceeded the element cap (" +
                           std::to_string(cap) + ")");
        elems.push_back(std::move(prod));
      }
    }
  }
}

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------
// MatrixGroup

size_t MatrixGroup::order() const { return storage ? storage->size() : 0; }

CycloMatrix MatrixGroup::element(size_t i) const {
  if (!storage || i >= storage->size())
    throw InputError("group element index out of range");
  return storage->dyadic ? detail::to_cyclo(storage->d[i]) : storage->c[i];
}

bool MatrixGroup::contains(const CycloMatrix& A) const {
  if (!storage || A.n != m) return false;
  if (storage->dyadic) {
    auto d = detail::to_dyadic(A);
    if (!d) return false;
    return storage->keys.count(detail::dmat_key(*d)) != 0;
  }
  return storage->keys.count(detail::cyclo_key(A)) != 0;
}

MatrixGroup close_group(const std::vector<CycloMatrix>& generators,
                        size_t cap) {
  if (generators.empty())
    throw InputError("group closure needs at least one generator");
  const int m = generators[0].n;
  if (m <= 0) throw InputError("generators must be nonempty square matrices");
  for (const CycloMatrix& gmat : generators) {
    if (gmat.n != m)
      throw InputError("generators must all have the same size");
    // det(I - tA) has t^m coefficient (-1)^m det(A); zero means singular.
    if (det_one_minus_t(gmat)[size_t(m)].is_zero())
      throw InputError("singular generator cannot lie in a matrix group");
  }

  auto st = std::make_shared<detail::GroupStorage>();
  std::vector<detail::DMat> dgens;
  bool dyadic = true;
  for (const CycloMatrix& gmat : generators) {
    auto d = detail::to_dyadic(gmat);
    if (!d) {
      dyadic = false;
      break;
    }
    dgens.push_back(std::move(*d));
  }
  st->dyadic = dyadic;
  if (dyadic) {
    st->d.push_back(detail::dmat_identity(m));
    st->keys.insert(detail::dmat_key(st->d[0]));
    detail::bfs_close(st->d, st->keys, dgens, cap, detail::dmat_mul,
                      detail::dmat_key);
  } else {
    st->c.push_back(CycloMatrix::identity(m));
    st->keys.insert(detail::cyclo_key(st->c[0]));
    detail::bfs_close(
        st->c, st->keys, generators, cap,
        [](const CycloMatrix& a, const CycloMatrix& b) { return a * b; },
        detail::cyclo_key);
  }

  // Closure spot-check: products of random element pairs must stay inside.
  // BFS guarantees this for (element, generator) pairs; sampling arbitrary
  // pairs guards the hashing and normalization instead of the mathematics.
  {
    std::mt19937_64 rng(0xC105E5E7u);
    const size_t n = st->size();
    const size_t samples = std::min<size_t>(n * n, 48);
    for (size_t s = 0; s < samples; ++s) {
      size_t i = size_t(rng() % n), j = size_t(rng() % n);
      bool ok;
      if (st->dyadic)
        ok = st->keys.count(
                 detail::dmat_key(detail::dmat_mul(st->d[i], st->d[j]))) != 0;
      else
        ok = st->keys.count(detail::cyclo_key(st->c[i] * st->c[j])) != 0;
      if (!ok)
        throw MathError("closure self-check failed: a product of two group "
                        "elements hashed outside the closed set");
    }
  }

  MatrixGroup G;
  G.m = m;
  G.generators = generators;
  G.storage = std::move(st);
  return G;
}

std::vector<CycloMatrix> transform_group_generators(int g) {
  if (g < 1) throw InputError("genus must be at least 1");
  std::vector<CycloMatrix> out;
  out.push_back(matrix_T(g));
  out.push_back(matrix_E(g));
  for (const AffineMap& s : affine_group(g)) out.push_back(matrix_perm(s));
  out.push_back(CycloMatrix::identity(1 << g) * CycloNum::eta8());
  return out;
}

MatrixGroup transform_group(int g, size_t cap) {
  MatrixGroup G = close_group(transform_group_generators(g), cap);
  G.diagonal_copies = 2;
  return G;
}

// ---------------------------------------------------------------------------
// DimensionSeries / molien

Int DimensionSeries::at(int n) const {
  if (n < 0 || n > D)
    throw InputError("series coefficient index outside truncation range");
  return coeff[size_t(n)];
}

std::vector<Int> DimensionSeries::at_multiples(int step) const {
  if (step <= 0) throw InputError("step must be positive");
  std::vector<Int> out;
  for (int n = 0; n <= D; n += step) out.push_back(coeff[size_t(n)]);
  return out;
}

bool DimensionSeries::supported_on_multiples(int step) const {
  if (step <= 0) throw InputError("step must be positive");
  for (int n = 0; n <= D; ++n)
    if (n % step != 0 && coeff[size_t(n)] != 0) return false;
  return true;
}

std::string DimensionSeries::to_json() const {
  nlohmann::json j;
  j["truncation"] = D;
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& c : coeff) arr.push_back(c.get_str());
  j["coefficients"] = arr;
  return j.dump();
}

namespace {

// Canonical key for the trace tuple tr(A^1..A^m) in dyadic form; two
// elements share it exactly when they share a characteristic polynomial
// (Newton's identities recover the coefficients from these traces).
std::string dyadic_trace_key(const detail::DMat& A) {
  std::string key;
  detail::DMat P = A;
  for (int j = 1; j <= A.m; ++j) {
    if (j > 1) P = detail::dmat_mul(P, A);
    std::array<int64_t, 4> t{0, 0, 0, 0};
    for (int r = 0; r < P.m; ++r)
      for (int k = 0; k < 4; ++k) t[k] += P.e[size_t(r) * P.m + r][k];
    int den = P.den;
    while (den > 0 && ((t[0] | t[1] | t[2] | t[3]) & 1) == 0) {
      for (auto& c : t) c >>= 1;
      --den;
    }
    key += std::to_string(t[0]) + ',' + std::to_string(t[1]) + ',' +
           std::to_string(t[2]) + ',' + std::to_string(t[3]) + '@' +
           std::to_string(den) + ';';
  }
  return key;
}

std::string cyclo_charpoly_key(const CycloMatrix& A) {
  std::string key;
  for (const CycloNum& c : det_one_minus_t(A)) {
    key += c.key();
    key.push_back(';');
  }
  return key;
}

}  // namespace

DimensionSeries molien(const MatrixGroup& G, int D) {
  if (!G.storage || G.order() == 0)
    throw InputError("dimension series needs a closed, nonempty group");
  if (D < 0) throw InputError("series truncation degree must be nonnegative");
  if (G.diagonal_copies < 1)
    throw InputError("diagonal_copies must be at least 1");

  // Bucket elements by characteristic polynomial: each distinct reciprocal
  // series is expanded once and weighted by its multiplicity.
  std::unordered_map<std::string, std::pair<size_t, long>> buckets;
  const auto& st = *G.storage;
  const size_t n = st.size();
  for (size_t i = 0; i < n; ++i) {
    std::string key = st.dyadic ? dyadic_trace_key(st.d[i])
                                : cyclo_charpoly_key(st.c[i]);
    auto [it, fresh] = buckets.try_emplace(std::move(key), i, 0L);
    (void)fresh;
    ++it->second.second;
  }

  std::vector<CycloNum> acc(size_t(D) + 1, CycloNum(0));
  for (const auto& [key, rep_count] : buckets) {
    (void)key;
    CycloMatrix rep = G.element(rep_count.first);
    std::vector<CycloNum> det = det_one_minus_t(rep);
    std::vector<CycloNum> q = det;
    for (int c = 1; c < G.diagonal_copies; ++c) q = series_mul(q, det, D);
    std::vector<CycloNum> inv = series_inv(q, D);
    CycloNum weight{Rat(rep_count.second)};
    for (int d = 0; d <= D; ++d)
      if (!inv[size_t(d)].is_zero()) acc[size_t(d)] += weight * inv[size_t(d)];
  }

  const CycloNum scale{Rat(1) / Rat(long(G.order()))};
  DimensionSeries S;
  S.D = D;
  S.coeff.resize(size_t(D) + 1);
  for (int d = 0; d <= D; ++d) {
    CycloNum v = acc[size_t(d)] * scale;
    if (!v.is_rational())
      throw MathError("dimension series coefficient at degree " +
                      std::to_string(d) +
                      " has a nonrational part: " + v.to_string());
    Rat r = *v.to_rational();
    if (r.get_den() != 1)
      throw MathError("dimension series coefficient at degree " +
                      std::to_string(d) +
                      " is not an integer: " + rat_to_string(r));
    if (r < 0)
      throw MathError("dimension series coefficient at degree " +
                      std::to_string(d) + " is negative");
    S.coeff[size_t(d)] = r.get_num();
  }
  return S;
}

// ---------------------------------------------------------------------------
// Closed-form comparison

std::vector<Int> poly_mul(const std::vector<Int>& a,
                          const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Int> poly_one_minus_tk(int k) {
  if (k <= 0) throw InputError("exponent must be positive");
  std::vector<Int> out(size_t(k) + 1, Int(0));
  out[0] = 1;
  out[size_t(k)] = -1;
  return out;
}

void invariant_series_closed_form(int g, std::vector<Int>& numerator,
                                  std::vector<Int>& denominator) {
  auto spread = [](const std::vector<long>& at8k) {
    std::vector<Int> out(8 * (at8k.size() - 1) + 1, Int(0));
    for (size_t k = 0; k < at8k.size(); ++k) out[8 * k] = at8k[k];
    return out;
  };
  if (g == 1) {
    numerator = spread({1, 8, 21, 58, 47, 35, 21, 1});
    denominator = poly_mul(poly_mul(poly_one_minus_tk(8), poly_one_minus_tk(8)),
                           poly_mul(poly_one_minus_tk(24), poly_one_minus_tk(24)));
    return;
  }
  if (g == 2) {
    numerator = spread({1,    8,     49,    325,   1240,  3421,
                        7987, 15287, 24892, 35648, 45097, 50365,
                        50365, 45097, 35648, 24892, 15287, 7987,
                        3421, 1240,  325,   49,    8,     1});
    denominator = poly_mul(poly_one_minus_tk(8), poly_one_minus_tk(8));
    for (int i = 0; i < 4; ++i)
      denominator = poly_mul(denominator, poly_one_minus_tk(24));
    denominator = poly_mul(denominator, poly_one_minus_tk(40));
    denominator = poly_mul(denominator, poly_one_minus_tk(40));
    return;
  }
  throw InputError("closed form known only for genus 1 and 2");
}

std::string SeriesCheck::to_json() const {
  nlohmann::json j;
  j["match"] = match;
  if (!match) j["first_mismatch"] = first_mismatch;
  if (!detail.empty()) j["detail"] = detail;
  return j.dump();
}

SeriesCheck molien_closed_form_check(const DimensionSeries& series,
                                     const std::vector<Int>& numerator,
                                     const std::vector<Int>& denominator) {
  if (denominator.empty() || denominator[0] == 0)
    throw InputError("denominator needs a nonzero constant term");
  const int D = series.D;
  std::vector<Rat> num(size_t(D) + 1, Rat(0));
  for (size_t i = 0; i < numerator.size() && int(i) <= D; ++i)
    num[i] = Rat(numerator[i]);
  std::vector<Rat> den(denominator.size());
  for (size_t i = 0; i < denominator.size(); ++i) den[i] = Rat(denominator[i]);
  std::vector<Rat> expansion = series_mul(num, series_inv(den, D), D);

  SeriesCheck out;
  out.match = true;
  for (int d = 0; d <= D; ++d) {
    if (expansion[size_t(d)] == Rat(series.coeff[size_t(d)])) continue;
    out.match = false;
    out.first_mismatch = d;
    out.detail = "degree " + std::to_string(d) + ": closed form gives " +
                 rat_to_string(expansion[size_t(d)]) + ", series has " +
                 series.coeff[size_t(d)].get_str();
    return out;
  }
  out.detail = "closed form matches the series up to degree " +
               std::to_string(D);
  return out;
}

// ---------------------------------------------------------------------------
// Invariance

namespace {

std::string monomial_str(const Monomial& mono) {
  if (mono.factors.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : mono.factors) {
    if (!s.empty()) s += "*";
    s += v.name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool is_scalar_matrix(const CycloMatrix& U, CycloNum& c) {
  c = U.at(0, 0);
  for (int r = 0; r < U.n; ++r)
    for (int k = 0; k < U.n; ++k) {
      if (r == k && !(U.at(r, k) == c)) return false;
      if (r != k && !U.at(r, k).is_zero()) return false;
    }
  return true;
}

bool is_diagonal_matrix(const CycloMatrix& U) {
  for (int r = 0; r < U.n; ++r)
    for (int k = 0; k < U.n; ++k)
      if (r != k && !U.at(r, k).is_zero()) return false;
  return true;
}

bool is_permutation_matrix(const CycloMatrix& U, std::vector<int>& sigma) {
  sigma.assign(size_t(U.n), -1);
  std::vector<char> hit(size_t(U.n), 0);
  for (int r = 0; r < U.n; ++r) {
    int col = -1;
    for (int k = 0; k < U.n; ++k) {
      if (U.at(r, k).is_zero()) continue;
      if (col >= 0 || !(U.at(r, k) == CycloNum(1))) return false;
      col = k;
    }
    if (col < 0 || hit[size_t(col)]) return false;
    hit[size_t(col)] = 1;
    sigma[size_t(r)] = col;
  }
  return true;
}

// Degrees of the homogeneous components present in p.
std::set<int> term_degrees(const MPoly& p) {
  std::set<int> out;
  for (const auto& [mono, c] : p.terms()) {
    (void)c;
    out.insert(mono.degree());
  }
  return out;
}

std::string leading_difference(const MPoly& a, const MPoly& b) {
  MPoly diff = a - b;
  if (diff.is_zero()) return "";
  const auto& [mono, c] = *diff.terms().begin();
  return monomial_str(mono) + " differs by " + rat_to_string(c);
}

// One butterfly step v -> v + w, w -> v - w with every other variable fixed.
// Expanding just the (v, w) exponents keeps the per-term blowup at
// (e_v + 1)(e_w + 1) instead of the product over all substituted variables,
// which is what makes the transform check cheap on large genus-2 inputs.
MPoly butterfly_pair(const MPoly& p, VarId v, VarId w) {
  static thread_local std::vector<std::vector<Int>> pascal{{Int(1)}};
  auto binom = [](uint32_t n, uint32_t k) -> const Int& {
    while (pascal.size() <= n) {
      const auto& prev = pascal.back();
      std::vector<Int> row(prev.size() + 1, Int(1));
      for (size_t i = 1; i + 1 < row.size(); ++i)
        row[i] = prev[i - 1] + prev[i];
      pascal.push_back(std::move(row));
    }
    return pascal[n][k];
  };
  MPoly out;
  Monomial rest;
  for (const auto& [mono, c] : p.terms()) {
    uint32_t ev = 0, ew = 0;
    rest.factors.clear();
    for (const auto& [var, e] : mono.factors) {
      if (var == v)
        ev = e;
      else if (var == w)
        ew = e;
      else
        rest.factors.emplace_back(var, e);
    }
    if (ev == 0 && ew == 0) {
      out.add_term(mono, c);
      continue;
    }
    for (uint32_t i = 0; i <= ev; ++i)
      for (uint32_t j = 0; j <= ew; ++j) {
        Rat coef = c * Rat(binom(ev, i) * binom(ew, j));
        if ((ew - j) & 1) coef = -coef;
        const uint32_t pv = i + j, pw = (ev - i) + (ew - j);
        Monomial m2;
        m2.factors.reserve(rest.factors.size() + 2);
        bool put_v = pv == 0, put_w = pw == 0;
        for (const auto& fac : rest.factors) {
          if (!put_v && v < fac.first) {
            m2.factors.emplace_back(v, pv);
            put_v = true;
          }
          if (!put_w && w < fac.first) {
            m2.factors.emplace_back(w, pw);
            put_w = true;
          }
          m2.factors.push_back(fac);
        }
        if (!put_v) m2.factors.emplace_back(v, pv);
        if (!put_w) m2.factors.emplace_back(w, pw);
        out.add_term(m2, coef);
      }
  }
  return out;
}

}  // namespace

std::string InvarianceReport::to_json() const {
  nlohmann::json j;
  j["invariant"] = invariant;
  j["notes"] = notes;
  return j.dump();
}

InvarianceReport check_invariance(const MPoly& p,
                                  const std::vector<CycloMatrix>& generators,
                                  int g) {
  if (g < 1) throw InputError("genus must be at least 1");
  const int m = 1 << g;
  for (const VarId& v : p.variables()) {
    if (v.block != 1)
      throw InputError("invariance applies to plain (single-block) "
                       "polynomials; got variable " + v.name());
    if (v.label >= m)
      throw InputError("variable " + v.name() +
                       " has a label outside the genus range");
  }

  int homo_deg = -1;
  const bool homogeneous = p.is_homogeneous(&homo_deg);
  const std::set<int> degrees = term_degrees(p);
  const CycloMatrix hadamard = matrix_T(g);
  const CycloPoly p_wide = widen(p);

  InvarianceReport report;
  for (size_t gi = 0; gi < generators.size(); ++gi) {
    const CycloMatrix& U = generators[gi];
    if (U.n != m)
      throw InputError("generator " + std::to_string(gi) +
                       " has size " + std::to_string(U.n) +
                       ", expected " + std::to_string(m));
    const std::string tag = "generator " + std::to_string(gi) + ": ";

    CycloNum scalar;
    std::vector<int> sigma;
    if (is_scalar_matrix(U, scalar)) {
      // A scalar c*I sends every degree-d term to c^d times itself.
      for (int d : degrees) {
        CycloNum factor = cyc_pow(scalar, unsigned(d));
        if (factor == CycloNum(1)) continue;
        std::string note = tag + "scalar block (" + scalar.to_string() +
                           ")*I scales the degree-" + std::to_string(d) +
                           " part by " + factor.to_string() + " != 1";
        if (scalar == CycloNum::eta8())
          note += " (the scalar is the primitive 8th root of unity, so the "
                  "degree must be a multiple of 8; " +
                  std::to_string(d) + " is not)";
        report.notes.push_back(note);
        report.invariant = false;
      }
      continue;
    }

    if (is_permutation_matrix(U, sigma)) {
      MPoly q = rename_variables(p, [&](VarId v) {
        v.label = uint16_t(sigma[v.label]);
        return v;
      });
      if (!(q == p)) {
        report.invariant = false;
        report.notes.push_back(tag + "coordinate relabeling changes the "
                               "polynomial: " + leading_difference(q, p));
      }
      continue;
    }

    if (is_diagonal_matrix(U)) {
      bool ok = true;
      for (const auto& [mono, c] : p.terms()) {
        (void)c;
        CycloNum factor(1);
        for (const auto& [v, e] : mono.factors)
          factor = factor * cyc_pow(U.at(v.label, v.label), e);
        if (factor == CycloNum(1)) continue;
        report.invariant = false;
        report.notes.push_back(tag + "phase block scales " +
                               monomial_str(mono) + " by " +
                               factor.to_string() + " != 1");
        ok = false;
        break;
      }
      (void)ok;
      continue;
    }

    if (U == hadamard && homogeneous && (g * homo_deg) % 4 == 0) {
      // The transform block factors per label bit into 2x2 mixes
      // (v, w) -> (v + w, v - w), and the scalar ((1+i)/2)^(g*deg)
      // collapses to (-4)^(-g*deg/4), so the whole comparison stays in
      // rational arithmetic.
      MPoly q = p;
      for (int bit = 0; bit < g; ++bit)
        for (int a = 0; a < m; ++a) {
          if (a & (1 << bit)) continue;
          const int b = a | (1 << bit);
          for (VarKind kind : {VarKind::X, VarKind::Y}) {
            // Label order a < b matches variable priority, as
            // butterfly_pair's sorted-insert requires.
            VarId v{kind, 1, uint16_t(a)}, w{kind, 1, uint16_t(b)};
            q = butterfly_pair(q, v, w);
          }
        }
      Int pow4 = 1;
      for (int i = 0; i < (g * homo_deg) / 4; ++i) pow4 *= -4;
      MPoly rhs = p * Rat(pow4);
      if (!(q == rhs)) {
        report.invariant = false;
        report.notes.push_back(tag + "transform block changes the "
                               "polynomial: " + leading_difference(q, rhs));
      }
      continue;
    }

    // Generic route: substitute the exact linear action over Q(z).
    std::map<VarId, LinearFormT<CycloNum>> images;
    for (int a = 0; a < m; ++a)
      for (VarKind kind : {VarKind::X, VarKind::Y}) {
        LinearFormT<CycloNum> form;
        for (int b = 0; b < m; ++b)
          if (!U.at(a, b).is_zero())
            form.terms.push_back({VarId{kind, 1, uint16_t(b)}, U.at(a, b)});
        images[VarId{kind, 1, uint16_t(a)}] = std::move(form);
      }
    CycloPoly q = substitute_linear_cyclo(p, images);
    if (!(q == p_wide)) {
      report.invariant = false;
      CycloPoly diff = q - p_wide;
      const auto& [mono, c] = *diff.terms().begin();
      report.notes.push_back(tag + "transform changes the polynomial: " +
                             monomial_str(mono) + " differs by " +
                             c.to_string());
    }
  }
  return report;
}

InvarianceReport check_invariance(const MPoly& p, const MatrixGroup& G,
                                  int g) {
  return check_invariance(p, G.generators, g);
}

// ---------------------------------------------------------------------------
// Rank computations

namespace {

constexpr uint64_t kRankPrime = 4611686018427387847ULL;  // 2^62 - 57, prime

uint64_t mulmod(uint64_t a, uint64_t b) {
  return uint64_t((unsigned __int128)(a)*b % kRankPrime);
}

int modular_rank(const std::vector<std::vector<Int>>& M) {
  const size_t R = M.size(), C = M[0].size();
  std::vector<std::vector<uint64_t>> a(R, std::vector<uint64_t>(C));
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < C; ++j) {
      uint64_t r = mpz_fdiv_ui(M[i][j].get_mpz_t(), kRankPrime);
      a[i][j] = r;
    }
  size_t rank = 0;
  for (size_t c = 0; c < C && rank < R; ++c) {
    size_t piv = rank;
    while (piv < R && a[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[rank]);
    // Inverse of the pivot via Fermat exponentiation.
    uint64_t inv = 1, base = a[rank][c], e = kRankPrime - 2;
    while (e) {
      if (e & 1) inv = mulmod(inv, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    for (size_t i = rank + 1; i < R; ++i) {
      if (a[i][c] == 0) continue;
      uint64_t f = mulmod(a[i][c], inv);
      for (size_t j = c; j < C; ++j) {
        uint64_t sub = mulmod(f, a[rank][j]);
        a[i][j] = (a[i][j] >= sub) ? a[i][j] - sub
                                   : a[i][j] + kRankPrime - sub;
      }
    }
    ++rank;
  }
  return int(rank);
}

// Fraction-free (Bareiss) elimination; every division is exact, entries stay
// minors of the input. Destroys the matrix.
int bareiss_rank(std::vector<std::vector<Int>>& a) {
  const size_t R = a.size(), C = a[0].size();
  Int prev = 1;
  size_t rank = 0;
  for (size_t c = 0; c < C && rank < R; ++c) {
    size_t piv = rank;
    while (piv < R && a[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[rank]);
    for (size_t i = rank + 1; i < R; ++i) {
      for (size_t j = c + 1; j < C; ++j) {
        Int num = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return int(rank);
}

int rational_rank(std::vector<std::vector<Rat>> a) {
  if (a.empty()) return 0;
  const size_t R = a.size(), C = a[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < C && rank < R; ++c) {
    size_t piv = rank;
    while (piv < R && a[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[rank]);
    for (size_t i = rank + 1; i < R; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[rank][c];
      for (size_t j = c; j < C; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return int(rank);
}

}  // namespace

int span_dimension(const std::vector<MPoly>& polys) {
  if (polys.empty()) return 0;
  std::map<Monomial, size_t, MonomialOrder> cols;
  for (const MPoly& p : polys)
    for (const auto& [mono, c] : p.terms()) {
      (void)c;
      cols.try_emplace(mono, cols.size());
    }
  if (cols.empty()) return 0;

  // Integer rows: each polynomial scaled by the lcm of its denominators
  // (rank is row-scaling invariant).
  std::vector<std::vector<Int>> M;
  M.reserve(polys.size());
  for (const MPoly& p : polys) {
    std::vector<Int> row(cols.size(), Int(0));
    Int l = 1;
    for (const auto& [mono, c] : p.terms()) {
      (void)mono;
      l = lcm(l, c.get_den());
    }
    for (const auto& [mono, c] : p.terms()) {
      Rat v = c * Rat(l);
      row[cols.at(mono)] = v.get_num();
    }
    M.push_back(std::move(row));
  }

  const int mod = modular_rank(M);
  const int exact = bareiss_rank(M);
  if (mod != exact)
    std::cerr << "[span_dimension] modular rank " << mod
              << " disagrees with exact rank " << exact
              << " (prime divides a pivot minor); exact rank wins\n";
  return exact;
}

// ---------------------------------------------------------------------------
// Algebraic independence

std::string IndependenceVerdict::to_json() const {
  nlohmann::json j;
  j["independent"] = independent;
  j["certain"] = certain;
  j["rank"] = rank;
  j["trials"] = trials;
  j["detail"] = detail;
  return j.dump();
}

IndependenceVerdict algebraic_independence(const std::vector<MPoly>& polys,
                                           int trials, uint64_t seed) {
  if (polys.empty())
    return {true, true, 0, 0, "empty family is vacuously independent"};
  if (trials < 1) throw InputError("need at least one trial");

  std::set<VarId> var_set;
  for (const MPoly& p : polys)
    for (const VarId& v : p.variables()) var_set.insert(v);
  const std::vector<VarId> vars(var_set.begin(), var_set.end());
  const size_t R = polys.size(), V = vars.size();

  for (size_t i = 0; i < R; ++i)
    if (polys[i].is_zero())
      return {false, true, 0, 0,
              "polynomial " + std::to_string(i) +
                  " is zero, which is algebraically dependent by itself"};

  // Constant nonzero polynomials are likewise dependent (p - c = 0), and
  // they contribute a zero Jacobian row anyway; the rank test handles them.

  std::vector<std::vector<MPoly>> jac(R);
  for (size_t i = 0; i < R; ++i) {
    jac[i].reserve(V);
    for (const VarId& v : vars) jac[i].push_back(partial(polys[i], v));
  }

  std::mt19937_64 rng(seed);
  int best = 0;
  int used = 0;
  for (int t = 0; t < trials; ++t) {
    used = t + 1;
    std::map<VarId, Rat> point;
    for (const VarId& v : vars) point[v] = Rat(long(rng() % 41) - 20);
    std::vector<std::vector<Rat>> J(R, std::vector<Rat>(V, Rat(0)));
    for (size_t i = 0; i < R; ++i)
      for (size_t j = 0; j < V; ++j) J[i][j] = eval(jac[i][j], point);
    int rank = rational_rank(std::move(J));
    best = std::max(best, rank);
    if (size_t(best) == R)
      return {true, true, best, used,
              "Jacobian has full row rank " + std::to_string(best) +
                  " at a sampled rational point (trial " +
                  std::to_string(used) + ")"};
  }

  IndependenceVerdict out;
  out.independent = false;
  out.rank = best;
  out.trials = used;
  if (R > V) {
    out.certain = true;
    out.detail = std::to_string(R) + " polynomials in " + std::to_string(V) +
                 " variables cannot be algebraically independent";
  } else {
    out.certain = false;
    out.detail = "Jacobian rank stayed at " + std::to_string(best) +
                 " < " + std::to_string(R) + " over " + std::to_string(used) +
                 " sampled points: probably dependent (sampling cannot prove "
                 "dependence)";
  }
  return out;
}

}  // namespace jacobi
