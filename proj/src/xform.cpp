#include "jacobi/xform.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "jacobi/error.hpp"
#include <json.hpp>

namespace jacobi {

namespace {

void require_genus(int g) {
  if (g < 1 || g > 20) throw InputError("genus must be in [1,20]");
}

Rat inv_pow2(long e) { return Rat(1) / Rat(Int(1) << e); }

// The (-1)^{a.b}-signed substitution on every variable of p, blockwise, with
// the 1/2^(g*dim_c) scale. max_block = 1 restricts to plain polynomials.
MPoly transform_core(const MPoly& p, int g, int dim_c, int max_block) {
  require_genus(g);
  if (dim_c < 0) throw InputError("code dimension must be nonnegative");
  if (max_block < 1) throw InputError("block count must be positive");
  uint32_t labels = 1u << g;
  std::map<VarId, LinearForm> images;
  for (VarId v : p.variables()) {
    if (v.block > max_block)
      throw InputError(
          max_block == 1
              ? "polynomial uses blocks beyond 1; use split_macwilliams"
              : "variable block exceeds the declared block count");
    if (v.label >= labels)
      throw InputError("variable label exceeds the genus range");
    LinearForm lf;
    lf.terms.reserve(labels);
    for (uint32_t b = 0; b < labels; ++b) {
      int sign = (std::popcount(uint32_t(v.label) & b) & 1) ? -1 : 1;
      lf.terms.emplace_back(VarId{v.kind, v.block, uint16_t(b)}, Rat(sign));
    }
    images.emplace(v, std::move(lf));
  }
  MPoly q = substitute_linear(p, images);
  q *= inv_pow2(static_cast<long>(g) * dim_c);
  return q;
}

// First monomial at which a and b disagree, rendered with both coefficients.
std::string first_difference(const MPoly& a, const MPoly& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  MonomialOrder before;
  auto describe = [](const Monomial& m, const Rat& ca, const Rat& cb) {
    std::ostringstream os;
    os << to_string(MPoly::monomial(m, Rat(1))) << ": " << rat_to_string(ca)
       << " vs " << rat_to_string(cb);
    return os.str();
  };
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (before(ia->first, ib->first))
      return describe(ia->first, ia->second, Rat(0));
    if (before(ib->first, ia->first))
      return describe(ib->first, Rat(0), ib->second);
    if (ia->second != ib->second)
      return describe(ia->first, ia->second, ib->second);
    ++ia;
    ++ib;
  }
  if (ia != a.terms().end()) return describe(ia->first, ia->second, Rat(0));
  if (ib != b.terms().end()) return describe(ib->first, Rat(0), ib->second);
  return "";
}

std::string set_to_string(const std::vector<int>& s) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

int min_nonzero_weight(const BinaryCode& C) {
  int best = C.length() + 1;
  C.for_each_codeword([&](const GfVector& u) {
    if (!u.is_zero()) best = std::min(best, u.weight());
  });
  return best;
}

}  // namespace

MPoly macwilliams(const MPoly& p, int g, int dim_c) {
  return transform_core(p, g, dim_c, 1);
}

MPoly split_macwilliams(const MPoly& p, int g, int ell, int dim_c) {
  return transform_core(p, g, dim_c, ell);
}

MPoly polarize(const MPoly& p, int g) {
  require_genus(g);
  MPoly out;
  for (uint32_t a = 0; a < (1u << g); ++a) {
    MPoly d = partial(p, var_x(static_cast<int>(a)));
    if (!d.is_zero()) out += MPoly::variable(var_y(static_cast<int>(a))) * d;
  }
  return out;
}

MPoly polarize_split(const MPoly& p, int g, int ell, int k, int v_k) {
  require_genus(g);
  if (k < 1 || k > ell) throw InputError("block index out of range");
  if (v_k < 1) throw InputError("block size must be positive");
  MPoly out;
  for (uint32_t a = 0; a < (1u << g); ++a) {
    MPoly d = partial(p, var_x(static_cast<int>(a), k));
    if (!d.is_zero())
      out += MPoly::variable(var_y(static_cast<int>(a), k)) * d;
  }
  out *= Rat(1) / Rat(v_k);
  return out;
}

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["theorem"] = theorem;
  j["code"] = code;
  j["parameters"] = parameters;
  j["applicable"] = applicable;
  j["verdict"] = verdict;
  j["witness"] = witness;
  return j.dump();
}

std::string IndependenceReport::to_json() const {
  nlohmann::json j;
  j["all_equal"] = all_equal;
  j["exhaustive"] = exhaustive;
  j["sets_checked"] = sets_checked;
  j["common"] = all_equal ? to_string(common) : "";
  j["witness"] = witness;
  return j.dump();
}

CheckReport check_macwilliams(const BinaryCode& C, const std::vector<int>& T,
                              int g, const EnumOptions& opt) {
  CheckReport r;
  r.theorem = "macwilliams-dual";
  r.code = C.to_text();
  {
    std::ostringstream os;
    os << "g=" << g << " T=" << set_to_string(T);
    r.parameters = os.str();
  }
  MPoly lhs = macwilliams(jacobi_poly(C, T, g, opt), g, C.dim());
  MPoly rhs = jacobi_poly(C.dual(), T, g, opt);
  r.verdict = (lhs == rhs);
  if (!r.verdict) r.witness = first_difference(lhs, rhs);
  return r;
}

CheckReport check_split_macwilliams(const BinaryCode& C,
                                    const BlockPartition& P,
                                    const std::vector<std::vector<int>>& T,
                                    int g, const EnumOptions& opt) {
  CheckReport r;
  r.theorem = "split-macwilliams-dual";
  r.code = C.to_text();
  {
    std::ostringstream os;
    os << "g=" << g << " ell=" << P.ell() << " T=(";
    for (size_t i = 0; i < T.size(); ++i)
      os << (i ? "," : "") << set_to_string(T[i]);
    os << ')';
    r.parameters = os.str();
  }
  MPoly lhs = split_macwilliams(split_jacobi(C, P, T, g, opt), g,
                                static_cast<int>(P.ell()), C.dim());
  MPoly rhs = split_jacobi(C.dual(), P, T, g, opt);
  r.verdict = (lhs == rhs);
  if (!r.verdict) r.witness = first_difference(lhs, rhs);
  return r;
}

CheckReport check_derivative_puncture(const BinaryCode& C, int g,
                                      const EnumOptions& opt) {
  CheckReport r;
  r.theorem = "derivative-puncture";
  r.code = C.to_text();
  int n = C.length();
  {
    std::ostringstream os;
    os << "g=" << g << " n=" << n;
    r.parameters = os.str();
  }
  if (n < 2) throw InputError("puncturing needs length >= 2");

  MPoly W = weight_enumerator(C, g, opt);
  MPoly deriv;
  for (uint32_t a = 0; a < (1u << g); ++a)
    deriv += partial(W, var_x(static_cast<int>(a)));
  deriv *= Rat(1) / Rat(n);

  // "One punctured code" is read at the level the identity consumes: all
  // punctured enumerators coincide (permutation-equivalent punctures, like
  // those of d_plus(8), qualify even when the subspaces differ). A weight-1
  // codeword makes some puncture collapse codewords, which the derivative
  // bookkeeping cannot see, so injectivity is a hypothesis too.
  bool injective = min_nonzero_weight(C) > 1;
  std::vector<MPoly> punctured;
  bool same_enumerator = true;
  for (int i = 1; i <= n; ++i) {
    punctured.push_back(weight_enumerator(C.punctured(i), g, opt));
    if (punctured.back() != punctured.front()) same_enumerator = false;
  }

  r.applicable = injective && same_enumerator;
  if (r.applicable) {
    r.verdict = (deriv == punctured.front());
    if (!r.verdict) r.witness = first_difference(deriv, punctured.front());
  } else {
    // Unconditionally, the derivative sum averages coordinate deletion over
    // codeword tuples (a multiset when puncturing collapses codewords);
    // rebuild that average from the label-slice polynomials and compare.
    MPoly average;
    for (int i = 1; i <= n; ++i)
      for (uint32_t a = 0; a < (1u << g); ++a)
        average += z_polynomial(C, i, static_cast<int>(a), g, opt);
    average *= Rat(1) / Rat(n);
    r.verdict = (deriv == average);
    std::string why = !injective ? "a weight-1 codeword collapses puncturing"
                                 : "punctured enumerators differ by coordinate";
    r.witness = r.verdict ? why + "; derivative sum equals the "
                            "coordinate-deletion average"
                          : first_difference(deriv, average);
  }
  return r;
}

CheckReport check_polarization_chain(const BinaryCode& C, int t, int g,
                                     const EnumOptions& opt) {
  CheckReport r;
  r.theorem = "polarization-chain";
  r.code = C.to_text();
  int n = C.length();
  {
    std::ostringstream os;
    os << "g=" << g << " t=" << t << " n=" << n
       << " constants n(n-1)...(n-s+1) for s=1.." << t;
    r.parameters = os.str();
  }
  if (t < 0 || t > n) throw InputError("t out of range");

  r.applicable = is_t_homogeneous(C, t).is_homogeneous;

  MPoly acc = weight_enumerator(C, g, opt);
  r.verdict = true;
  std::vector<int> T;
  for (int s = 1; s <= t; ++s) {
    acc = polarize(acc, g);  // A^s W, unnormalized
    T.push_back(s);
    MPoly lhs = acc * (Rat(1) / Rat(falling_factorial(n, s)));
    MPoly rhs = jacobi_poly(C, T, g, opt);
    if (lhs != rhs) {
      r.verdict = false;
      std::ostringstream os;
      os << "order s=" << s << ": " << first_difference(lhs, rhs);
      r.witness = os.str();
      break;
    }
  }
  return r;
}

CheckReport check_split_polarization(const BinaryCode& C,
                                     const BlockPartition& P,
                                     const std::vector<int>& tvec, int g,
                                     const EnumOptions& opt) {
  CheckReport r;
  r.code = C.to_text();
  P.validate(C.length());
  size_t ell = P.ell();
  if (tvec.size() != ell)
    throw InputError("t vector length must match the partition");
  int t = 0;
  int max_tk = 0;
  for (size_t i = 0; i < ell; ++i) {
    if (tvec[i] < 0 || tvec[i] > static_cast<int>(P.blocks[i].size()))
      throw InputError("t_k out of range for its block");
    t += tvec[i];
    max_tk = std::max(max_tk, tvec[i]);
  }
  r.theorem =
      (t == 1) ? "split-polarization-single" : "split-polarization-chain";

  // Hypotheses: partitioned homogeneity of order t; for chains also a
  // minimum-weight floor.
  bool homo = is_ell_t_homogeneous(C, P, t).is_homogeneous;
  bool weight_ok = (t <= 1) || (min_nonzero_weight(C) >= t);
  r.applicable = homo && weight_ok;

  MPoly acc = split_weight_enumerator(C, P, g, opt);
  for (size_t k = 1; k <= ell; ++k)
    for (int rep = 0; rep < tvec[k - 1]; ++rep)
      acc = polarize_split(acc, g, static_cast<int>(ell), static_cast<int>(k),
                           static_cast<int>(P.blocks[k - 1].size()));

  // Correct the per-application 1/v_k scaling into falling factorials; a
  // no-op while every t_k <= 1.
  MPoly corrected = acc;
  for (size_t k = 1; k <= ell; ++k) {
    long v_k = static_cast<long>(P.blocks[k - 1].size());
    Int power{1};
    for (int rep = 0; rep < tvec[k - 1]; ++rep) power *= v_k;
    corrected *= Rat(power) / Rat(falling_factorial(v_k, tvec[k - 1]));
  }

  std::vector<std::vector<int>> T(ell);
  for (size_t k = 0; k < ell; ++k)
    T[k].assign(P.blocks[k].begin(), P.blocks[k].begin() + tvec[k]);
  MPoly rhs = split_jacobi(C, P, T, g, opt);

  bool literal_eq = (acc == rhs);
  bool corrected_eq = (corrected == rhs);
  r.verdict = corrected_eq;
  if (!corrected_eq) r.witness = first_difference(corrected, rhs);

  std::ostringstream os;
  os << "g=" << g << " t=(";
  for (size_t i = 0; i < ell; ++i) os << (i ? "," : "") << tvec[i];
  os << ") hypotheses: homogeneous=" << (homo ? "yes" : "no")
     << " min-weight>=t=" << (weight_ok ? "yes" : "no");
  if (max_tk > 1) {
    os << "; operator-power normalization (1/v_k per application) "
       << (literal_eq ? "matches" : "mismatches")
       << "; falling-factorial normalization "
       << (corrected_eq ? "matches" : "mismatches");
  }
  r.parameters = os.str();
  return r;
}

IndependenceReport check_t_independence(const BinaryCode& C, int t, int g,
                                        bool exhaustive, long samples,
                                        uint64_t seed, const EnumOptions& opt) {
  IndependenceReport r;
  int n = C.length();
  if (t < 0 || t > n) throw InputError("t out of range");

  // Candidate T sets, each sorted ascending, 1-based.
  std::vector<std::vector<int>> sets;
  Int total = binomial(n, t);
  if (!exhaustive && total <= Int(samples)) exhaustive = true;
  if (exhaustive) {
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i + 1;
    while (true) {
      sets.push_back(idx);
      int i = t - 1;
      while (i >= 0 && idx[i] == n - t + 1 + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (t == 0) sets.assign(1, {});
  } else {
    std::mt19937_64 rng(seed);
    std::set<std::vector<int>> seen;
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    while (static_cast<long>(seen.size()) < samples) {
      // Partial Fisher-Yates: the first t entries form the sample.
      for (int i = 0; i < t; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(pool[i], pool[pick(rng)]);
      }
      std::vector<int> T(pool.begin(), pool.begin() + t);
      std::sort(T.begin(), T.end());
      seen.insert(std::move(T));
    }
    sets.assign(seen.begin(), seen.end());
  }

  r.exhaustive = exhaustive;
  bool have_first = false;
  for (const auto& T : sets) {
    MPoly J = jacobi_poly(C, T, g, opt);
    ++r.sets_checked;
    if (!have_first) {
      have_first = true;
      r.common = std::move(J);
      r.all_equal = true;
      continue;
    }
    if (J != r.common) {
      r.all_equal = false;
      std::ostringstream os;
      os << "T=" << set_to_string(T) << " differs from T="
         << set_to_string(sets.front()) << ": "
         << first_difference(r.common, J);
      r.witness = os.str();
      break;
    }
  }
  if (!r.all_equal) r.common = MPoly::zero();
  return r;
}

}  // namespace jacobi
