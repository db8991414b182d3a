#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jacobi/error.hpp"
#include "jacobi/rat.hpp"

namespace jacobi {

// Variables come in two kinds per block: y (inside a T set) and x (outside).
// Labels are elements of F_2^g encoded as integers with the first bit most
// significant: label(a_1..a_g) = sum a_j 2^(g-j). Blocks are 1-based; plain
// (non-split) polynomials live in block 1.
enum class VarKind : uint8_t { Y = 0, X = 1 };

struct VarId {
  VarKind kind = VarKind::X;
  uint16_t block = 1;
  uint16_t label = 0;

  // Canonical variable priority: block, then y before x, then label.
  uint32_t key() const {
    return (uint32_t(block) << 17) | (uint32_t(kind) << 16) | label;
  }
  bool operator==(const VarId& o) const { return key() == o.key(); }
  bool operator<(const VarId& o) const { return key() < o.key(); }

  std::string name() const;  // "x0", "y3", "x2_1" (block 2, label 1)
};

inline VarId var_x(int label, int block = 1) {
  return VarId{VarKind::X, static_cast<uint16_t>(block),
               static_cast<uint16_t>(label)};
}
inline VarId var_y(int label, int block = 1) {
  return VarId{VarKind::Y, static_cast<uint16_t>(block),
               static_cast<uint16_t>(label)};
}

// Product of variable powers. Factors are sorted by variable priority and
// exponents are strictly positive.
struct Monomial {
  std::vector<std::pair<VarId, uint32_t>> factors;

  static Monomial one() { return {}; }
  static Monomial var(VarId v, uint32_t e = 1);

  int degree() const;
  uint32_t exponent(VarId v) const;
  Monomial times(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return factors == o.factors; }

  // True when every factor is sorted with positive exponent.
  bool well_formed() const;
};

// Print/storage order: higher total degree first; ties broken
// lexicographically along the variable priority sequence with the larger
// exponent on the earliest variable winning. This is exactly the order the
// printed basis polynomials use.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

namespace detail {

template <class C>
inline bool coef_is_zero(const C& c) {
  return c.is_zero();
}
inline bool coef_is_zero(const Rat& c) { return c == 0; }

struct Mix64Hash {
  size_t operator()(uint64_t v) const { return hash_mix(v); }
};

// Exponent packing: up to 8 variables, 8 bits each. Lets the hot paths
// (multiplication, substitution, enumeration assembly) work on uint64 keys.
struct PackTable {
  std::vector<VarId> vars;  // sorted by priority, size <= 8

  int slot_of(VarId v) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == v) return static_cast<int>(i);
    return -1;
  }
  uint64_t pack(const Monomial& m) const;
  Monomial unpack(uint64_t key) const;
};

}  // namespace detail

// Sparse polynomial with exact coefficients over the monomials above.
// Deterministic: term iteration always follows MonomialOrder.
template <class Coef>
class MPolyT {
 public:
  using Terms = std::map<Monomial, Coef, MonomialOrder>;

  MPolyT() = default;

  static MPolyT zero() { return {}; }
  static MPolyT constant(const Coef& c) {
    MPolyT p;
    p.add_term(Monomial::one(), c);
    return p;
  }
  static MPolyT variable(VarId v) {
    MPolyT p;
    p.add_term(Monomial::var(v), Coef(1));
    return p;
  }
  static MPolyT monomial(const Monomial& m, const Coef& c) {
    MPolyT p;
    p.add_term(m, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  // Merges into the term map and drops the entry if the sum vanishes.
  void add_term(const Monomial& m, const Coef& c) {
    if (detail::coef_is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (detail::coef_is_zero(it->second)) terms_.erase(it);
    }
  }

  MPolyT& operator+=(const MPolyT& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPolyT& operator-=(const MPolyT& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Coef(0) - c);
    return *this;
  }
  friend MPolyT operator+(MPolyT a, const MPolyT& b) { return a += b; }
  friend MPolyT operator-(MPolyT a, const MPolyT& b) { return a -= b; }

  MPolyT& operator*=(const Coef& c) {
    if (detail::coef_is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v = v * c;
    return *this;
  }
  friend MPolyT operator*(MPolyT p, const Coef& c) { return p *= c; }
  friend MPolyT operator*(const Coef& c, MPolyT p) { return p *= c; }

  MPolyT operator*(const MPolyT& o) const;

  bool operator==(const MPolyT& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPolyT& o) const { return !(*this == o); }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  bool is_homogeneous(int* deg_out = nullptr) const;
  std::vector<VarId> variables() const;
  uint32_t max_exponent(VarId v) const;

 private:
  Terms terms_;
};

using MPoly = MPolyT<Rat>;

// --- arithmetic helpers -----------------------------------------------------

// A linear form sum c_i * v_i, the image type for substitution.
template <class Coef>
struct LinearFormT {
  std::vector<std::pair<VarId, Coef>> terms;
};
using LinearForm = LinearFormT<Rat>;

// d/dv.
template <class Coef>
MPolyT<Coef> partial(const MPolyT<Coef>& p, VarId v);

// Exact evaluation; every variable of p must be assigned.
Rat eval(const MPoly& p, const std::map<VarId, Rat>& point);

// Substitutes each variable by a linear form in variables of the same kind
// and block (a scalar multiple of the variable itself is the degenerate
// case). Every variable of p must have an image.
template <class CoefOut, class CoefIn>
MPolyT<CoefOut> substitute_linear_t(const MPolyT<CoefIn>& p,
                                    const std::map<VarId, LinearFormT<CoefOut>>& images);

MPoly substitute_linear(const MPoly& p, const std::map<VarId, LinearForm>& images);

// Exchanges x and y within every block (the complementation symmetry map).
MPoly swap_kinds(const MPoly& p);

// Relabels every variable through f (any VarId -> VarId map); exponents of
// variables that collide after renaming are added.
template <class Coef, class Fn>
MPolyT<Coef> rename_variables(const MPolyT<Coef>& p, Fn&& f) {
  MPolyT<Coef> out;
  for (const auto& [m, c] : p.terms()) {
    std::map<VarId, uint32_t> exps;
    for (const auto& [v, e] : m.factors) exps[f(v)] += e;
    Monomial r;
    for (const auto& [v, e] : exps) r.factors.emplace_back(v, e);
    out.add_term(r, c);
  }
  return out;
}

// --- canonical text and JSON forms ------------------------------------------

// "x0^8 + 14*x0^4*x1^4 + x1^8"; block >= 2 variables print as "x2_1".
std::string to_string(const MPoly& p);
// Inverse of to_string; also tolerant of extra whitespace and "7 x0" forms.
MPoly mpoly_from_string(const std::string& text);
// [["14", [["x",1,0,4], ...]], ...] — one [coeff, vars] entry per term.
std::string to_json(const MPoly& p);
// Inverse of to_json.
MPoly mpoly_from_json(const std::string& text);

// --- packed integer form -----------------------------------------------------

// Compact storage for large integer-coefficient polynomials (candidate basis
// elements): packed exponent keys plus int64 coefficients. Conversion throws
// if the polynomial has more than 8 variables, an exponent > 255, or a
// non-integer / out-of-range coefficient.
struct PackedPoly {
  detail::PackTable table;
  std::vector<std::pair<uint64_t, int64_t>> terms;  // sorted by key

  size_t term_count() const { return terms.size(); }
};

PackedPoly pack_int(const MPoly& p);
MPoly unpack_int(const PackedPoly& p);

// --- template implementations ------------------------------------------------

template <class Coef>
MPolyT<Coef> MPolyT<Coef>::operator*(const MPolyT& o) const {
  MPolyT out;
  if (is_zero() || o.is_zero()) return out;
  // Packed fast path when the union of variables fits 8 slots and exponent
  // sums stay below 256.
  std::vector<VarId> vars = variables();
  for (VarId v : o.variables()) {
    bool seen = false;
    for (VarId w : vars) seen = seen || (w == v);
    if (!seen) vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  bool packable = vars.size() <= 8;
  if (packable) {
    for (VarId v : vars)
      if (static_cast<uint32_t>(max_exponent(v)) +
              static_cast<uint32_t>(o.max_exponent(v)) >
          255)
        packable = false;
  }
  if (packable) {
    detail::PackTable tab{vars};
    std::vector<std::pair<uint64_t, Coef>> a, b;
    a.reserve(term_count());
    b.reserve(o.term_count());
    for (const auto& [m, c] : terms_) a.emplace_back(tab.pack(m), c);
    for (const auto& [m, c] : o.terms_) b.emplace_back(tab.pack(m), c);
    std::unordered_map<uint64_t, Coef, detail::Mix64Hash> acc;
    acc.reserve(a.size() + b.size());
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) {
        Coef prod = ca * cb;
        auto [it, fresh] = acc.emplace(ka + kb, prod);
        if (!fresh) it->second += prod;
      }
    for (const auto& [k, c] : acc)
      if (!detail::coef_is_zero(c)) out.terms_.emplace(tab.unpack(k), c);
    return out;
  }
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

template <class Coef>
bool MPolyT<Coef>::is_homogeneous(int* deg_out) const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d < 0)
      d = m.degree();
    else if (m.degree() != d)
      return false;
  }
  if (deg_out) *deg_out = d;
  return true;
}

template <class Coef>
std::vector<VarId> MPolyT<Coef>::variables() const {
  std::vector<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors) {
      bool seen = false;
      for (VarId w : out) seen = seen || (w == v);
      if (!seen) out.push_back(v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Coef>
uint32_t MPolyT<Coef>::max_exponent(VarId v) const {
  uint32_t e = 0;
  for (const auto& [m, c] : terms_) e = std::max(e, m.exponent(v));
  return e;
}

template <class Coef>
MPolyT<Coef> partial(const MPolyT<Coef>& p, VarId v) {
  MPolyT<Coef> out;
  for (const auto& [m, c] : p.terms()) {
    uint32_t e = m.exponent(v);
    if (e == 0) continue;
    Monomial d;
    for (const auto& [w, f] : m.factors) {
      if (w == v) {
        if (f > 1) d.factors.emplace_back(w, f - 1);
      } else {
        d.factors.emplace_back(w, f);
      }
    }
    out.add_term(d, c * Coef(static_cast<long>(e)));
  }
  return out;
}

template <class CoefOut, class CoefIn>
MPolyT<CoefOut> substitute_linear_t(
    const MPolyT<CoefIn>& p,
    const std::map<VarId, LinearFormT<CoefOut>>& images) {
  for (const auto& [v, form] : images)
    for (const auto& [w, c] : form.terms)
      if (w.kind != v.kind || w.block != v.block)
        throw InputError("substitution image of " + v.name() +
                         " mixes another kind-and-block family (" + w.name() +
                         ")");
  // Image powers are cached per variable; each is a polynomial in <= 2^g
  // variables of one family, so products stay small.
  std::map<VarId, std::vector<MPolyT<CoefOut>>> powers;
  auto power = [&](VarId v, uint32_t e) -> const MPolyT<CoefOut>& {
    auto it = powers.find(v);
    if (it == powers.end()) {
      auto img = images.find(v);
      if (img == images.end())
        throw InputError("no substitution image for variable " + v.name());
      MPolyT<CoefOut> lin;
      for (const auto& [w, c] : img->second.terms)
        lin.add_term(Monomial::var(w), c);
      std::vector<MPolyT<CoefOut>> cache;
      cache.push_back(MPolyT<CoefOut>::constant(CoefOut(1)));
      cache.push_back(std::move(lin));
      it = powers.emplace(v, std::move(cache)).first;
    }
    auto& cache = it->second;
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  MPolyT<CoefOut> out;
  for (const auto& [m, c] : p.terms()) {
    MPolyT<CoefOut> acc = MPolyT<CoefOut>::constant(CoefOut(c));
    for (const auto& [v, e] : m.factors) acc = acc * power(v, e);
    out += acc;
  }
  return out;
}

}  // namespace jacobi
