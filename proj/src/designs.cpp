#include "jacobi/designs.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "jacobi/error.hpp"
#include <json.hpp>

namespace jacobi {

namespace {

// Formats a coordinate set mask as "{1,3,5}" (1-based points).
std::string mask_to_set(uint64_t mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  while (mask) {
    int i = std::countr_zero(mask);
    mask &= mask - 1;
    if (!first) os << ',';
    os << (i + 1);
    first = false;
  }
  os << '}';
  return os.str();
}

// Lexicographic t-subset iteration over 0-based indices drawn from `points`.
// Visits f(chosen index vector) for every t-subset; returns false if f asked
// to stop early.
bool for_each_subset(const std::vector<int>& points, int t,
                     const std::function<bool(const std::vector<int>&)>& f) {
  int m = static_cast<int>(points.size());
  if (t > m) return true;
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  std::vector<int> chosen(t);
  while (true) {
    for (int i = 0; i < t; ++i) chosen[i] = points[idx[i]];
    if (!f(chosen)) return false;
    // advance to the next combination
    int i = t - 1;
    while (i >= 0 && idx[i] == m - t + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

uint64_t mask_of(const std::vector<int>& coords0) {
  uint64_t m = 0;
  for (int c : coords0) m |= 1ull << c;
  return m;
}

long count_superblocks(const std::vector<uint64_t>& blocks, uint64_t mask) {
  long c = 0;
  for (uint64_t b : blocks)
    if ((b & mask) == mask) ++c;
  return c;
}

std::vector<uint64_t> collect_supports(
    const BinaryCode& C, const std::function<bool(const GfVector&)>& keep) {
  if (C.length() > 62)
    throw InputError("design verification supports length <= 62");
  std::vector<uint64_t> out;
  C.for_each_codeword([&](const GfVector& u) {
    if (!u.is_zero() && keep(u)) out.push_back(u.word0());
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<uint64_t> block_masks(const BlockPartition& P) {
  std::vector<uint64_t> masks;
  masks.reserve(P.ell());
  for (const auto& X : P.blocks) {
    uint64_t m = 0;
    for (int c : X) m |= 1ull << (c - 1);
    masks.push_back(m);
  }
  return masks;
}

// All compositions t = t_1 + ... + t_l with 0 <= t_i <= cap[i], lexicographic.
void for_each_composition(int t, const std::vector<int>& cap,
                          const std::function<void(const std::vector<int>&)>& f) {
  size_t l = cap.size();
  std::vector<int> cur(l, 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int rest) {
    if (i + 1 == l) {
      if (rest <= cap[i]) {
        cur[i] = rest;
        f(cur);
      }
      return;
    }
    int hi = std::min(rest, cap[i]);
    for (int v = 0; v <= hi; ++v) {
      cur[i] = v;
      rec(i + 1, rest - v);
    }
  };
  if (l > 0)
    rec(0, t);
  else if (t == 0)
    f(cur);
}

std::string composition_to_string(const std::vector<int>& tv) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < tv.size(); ++i) os << (i ? "," : "") << tv[i];
  os << ')';
  return os.str();
}

}  // namespace

BlockSystem supports_of_weight(const BinaryCode& C, int k) {
  if (k < 0 || k > C.length()) throw InputError("weight out of range");
  BlockSystem B;
  B.n = C.length();
  if (k == 0) {
    // the zero word is always in a linear code; its support is the empty set
    B.blocks.push_back(0);
    return B;
  }
  B.blocks =
      collect_supports(C, [&](const GfVector& u) { return u.weight() == k; });
  return B;
}

GeneralizedBlockSystem supports_of_profile(const BinaryCode& C,
                                           const BlockPartition& P,
                                           const std::vector<int>& kvec) {
  P.validate(C.length());
  if (kvec.size() != P.ell())
    throw InputError("profile length must match the partition");
  GeneralizedBlockSystem B;
  B.n = C.length();
  B.partition = P;
  B.profile = kvec;
  std::vector<uint64_t> masks = block_masks(P);
  bool all_zero = true;
  for (size_t i = 0; i < kvec.size(); ++i) {
    if (kvec[i] < 0 || kvec[i] > static_cast<int>(P.blocks[i].size()))
      throw InputError("profile weight out of range for its block");
    if (kvec[i] != 0) all_zero = false;
  }
  if (all_zero) {
    B.blocks.push_back(0);
    return B;
  }
  B.blocks = collect_supports(C, [&](const GfVector& u) {
    uint64_t s = u.word0();
    for (size_t i = 0; i < masks.size(); ++i)
      if (std::popcount(s & masks[i]) != kvec[i]) return false;
    return true;
  });
  return B;
}

DesignVerdict is_t_design(const BlockSystem& B, int t) {
  DesignVerdict v;
  if (t < 0 || t > B.n) {
    v.reason = "t out of range";
    return v;
  }
  if (B.blocks.empty()) {
    v.is_design = true;  // trivial design
    v.lambda = 0;
    return v;
  }
  int k = std::popcount(B.blocks.front());
  for (uint64_t b : B.blocks) {
    if (std::popcount(b) != k) {
      v.reason = "blocks are not all of one size";
      return v;
    }
  }
  if (k < t) {
    v.reason = "block size below t";
    return v;
  }
  std::vector<int> points(B.n);
  for (int i = 0; i < B.n; ++i) points[i] = i;

  bool have_first = false;
  Int lambda{0};
  uint64_t first_mask = 0;
  bool ok = for_each_subset(points, t, [&](const std::vector<int>& sub) {
    uint64_t mask = mask_of(sub);
    Int c{count_superblocks(B.blocks, mask)};
    if (!have_first) {
      have_first = true;
      lambda = c;
      first_mask = mask;
      return true;
    }
    if (c != lambda) {
      std::ostringstream os;
      os << mask_to_set(first_mask) << " meets " << rat_to_string(Rat(lambda))
         << " blocks but " << mask_to_set(mask) << " meets "
         << rat_to_string(Rat(c));
      v.witness = os.str();
      return false;
    }
    return true;
  });
  if (!ok) {
    v.reason = "block counts differ between point sets";
    return v;
  }
  v.is_design = true;
  v.lambda = lambda;
  // Double-count incidences of t-subsets in blocks: each block holds C(k,t)
  // of them, each t-subset lies in lambda blocks.
  if (lambda * binomial(B.n, t) != Int(B.block_count()) * binomial(k, t))
    throw MathError("design counting inconsistency");
  return v;
}

DesignVerdict is_generalized_t_design(const GeneralizedBlockSystem& B, int t) {
  DesignVerdict v;
  if (t < 0 || t > B.n) {
    v.reason = "t out of range";
    return v;
  }
  int total = 0;
  for (int k : B.profile) total += k;
  if (B.blocks.empty()) {
    v.is_design = true;
    v.lambda = 0;
    return v;
  }
  if (total < t) {
    // No composition satisfies t_i <= k_i with sum t; nothing to count.
    v.is_design = true;
    v.lambda = 0;
    v.reason = "no admissible composition (total class weight below t)";
    return v;
  }

  std::vector<uint64_t> masks = block_masks(B.partition);
  size_t l = B.partition.ell();
  bool have_first = false;
  Int lambda{0};
  std::string first_desc;
  bool failed = false;

  for_each_composition(t, B.profile, [&](const std::vector<int>& tv) {
    if (failed) return;
    // also need t_i <= |X_i|; profile k_i <= |X_i| already, so implied.
    bool have_comp_first = false;
    Int comp_lambda{0};

    // Iterate the product of per-block t_i-subsets, lexicographically.
    std::vector<std::vector<int>> choice(l);
    std::function<bool(size_t, uint64_t)> rec = [&](size_t i,
                                                    uint64_t acc) -> bool {
      if (failed) return false;
      if (i == l) {
        Int c{count_superblocks(B.blocks, acc)};
        std::ostringstream desc;
        desc << composition_to_string(tv) << " at " << mask_to_set(acc);
        if (!have_comp_first) {
          have_comp_first = true;
          comp_lambda = c;
        }
        if (!have_first) {
          have_first = true;
          lambda = c;
          first_desc = desc.str();
          return true;
        }
        if (c != lambda) {
          std::ostringstream os;
          os << first_desc << " meets " << rat_to_string(Rat(lambda))
             << " blocks but " << desc.str() << " meets "
             << rat_to_string(Rat(c));
          v.witness = os.str();
          failed = true;
          return false;
        }
        return true;
      }
      std::vector<int> points;
      for (int c : B.partition.blocks[i]) points.push_back(c - 1);
      return for_each_subset(points, tv[i],
                             [&](const std::vector<int>& sub) -> bool {
                               return rec(i + 1, acc | mask_of(sub));
                             });
    };
    rec(0, 0);
    if (have_comp_first) v.per_composition.emplace_back(tv, comp_lambda);
  });

  if (failed) {
    v.reason = "block counts differ between choices";
    return v;
  }
  v.is_design = true;
  v.lambda = lambda;
  // Per-composition double count: lambda * prod C(|X_i|, t_i) incidences
  // equal |B| * prod C(k_i, t_i).
  for (const auto& [tv, lam] : v.per_composition) {
    Int left = lam, right{B.block_count()};
    for (size_t i = 0; i < l; ++i) {
      left *= binomial(static_cast<long>(B.partition.blocks[i].size()), tv[i]);
      right *= binomial(B.profile[i], tv[i]);
    }
    if (left != right) throw MathError("design counting inconsistency");
  }
  return v;
}

HomogeneityVerdict is_t_homogeneous(const BinaryCode& C, int t) {
  HomogeneityVerdict h;
  h.t = t;
  h.is_homogeneous = true;
  std::map<int, BlockSystem> by_weight;
  if (C.length() > 62)
    throw InputError("design verification supports length <= 62");
  C.for_each_codeword([&](const GfVector& u) {
    if (u.is_zero()) return;
    int w = u.weight();
    auto& B = by_weight[w];
    B.n = C.length();
    B.blocks.push_back(u.word0());
  });
  for (auto& [w, B] : by_weight) {
    std::sort(B.blocks.begin(), B.blocks.end());
    B.blocks.erase(std::unique(B.blocks.begin(), B.blocks.end()),
                   B.blocks.end());
    HomogeneityVerdict::ClassReport cr;
    cr.label = "k=" + std::to_string(w);
    cr.block_count = B.block_count();
    if (w < t) {
      cr.counted = false;  // too small to constrain a t-design; kept visible
      cr.verdict.reason = "block size below t; class not counted";
    } else {
      cr.verdict = is_t_design(B, t);
      if (!cr.verdict.is_design) h.is_homogeneous = false;
    }
    h.classes.push_back(std::move(cr));
  }
  return h;
}

HomogeneityVerdict is_ell_t_homogeneous(const BinaryCode& C,
                                        const BlockPartition& P, int t) {
  P.validate(C.length());
  HomogeneityVerdict h;
  h.t = t;
  h.is_homogeneous = true;
  if (C.length() > 62)
    throw InputError("design verification supports length <= 62");
  std::vector<uint64_t> masks = block_masks(P);
  std::map<std::vector<int>, std::vector<uint64_t>> by_profile;
  C.for_each_codeword([&](const GfVector& u) {
    if (u.is_zero()) return;
    std::vector<int> prof(masks.size());
    for (size_t i = 0; i < masks.size(); ++i)
      prof[i] = std::popcount(u.word0() & masks[i]);
    by_profile[prof].push_back(u.word0());
  });
  for (auto& [prof, blocks] : by_profile) {
    GeneralizedBlockSystem B;
    B.n = C.length();
    B.partition = P;
    B.profile = prof;
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    B.blocks = std::move(blocks);

    HomogeneityVerdict::ClassReport cr;
    cr.label = "k=" + composition_to_string(prof);
    cr.block_count = B.block_count();
    int total = 0;
    for (int k : prof) total += k;
    if (total < t) {
      cr.counted = false;
      cr.verdict.reason = "class weight below t; class not counted";
    } else {
      cr.verdict = is_generalized_t_design(B, t);
      if (!cr.verdict.is_design) h.is_homogeneous = false;
    }
    h.classes.push_back(std::move(cr));
  }
  return h;
}

std::string DesignVerdict::to_json() const {
  nlohmann::json j;
  j["is_design"] = is_design;
  j["lambda"] = rat_to_string(Rat(lambda));
  if (!reason.empty()) j["reason"] = reason;
  if (!witness.empty()) j["witness"] = witness;
  if (!per_composition.empty()) {
    nlohmann::json pc = nlohmann::json::array();
    for (const auto& [tv, lam] : per_composition) {
      nlohmann::json e;
      e["composition"] = tv;
      e["lambda"] = rat_to_string(Rat(lam));
      pc.push_back(e);
    }
    j["per_composition"] = pc;
  }
  return j.dump();
}

std::string HomogeneityVerdict::to_json() const {
  nlohmann::json j;
  j["is_homogeneous"] = is_homogeneous;
  j["t"] = t;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : classes) {
    nlohmann::json e;
    e["class"] = c.label;
    e["blocks"] = c.block_count;
    e["counted"] = c.counted;
    e["verdict"] = nlohmann::json::parse(c.verdict.to_json());
    cs.push_back(e);
  }
  j["classes"] = cs;
  return j.dump();
}

}  // namespace jacobi
