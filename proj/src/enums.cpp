#include "jacobi/enums.hpp"

#include <bit>
#include <climits>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "jacobi/error.hpp"

namespace jacobi {

BlockPartition BlockPartition::whole(int n) {
  BlockPartition p;
  p.blocks.emplace_back();
  for (int i = 1; i <= n; ++i) p.blocks.back().push_back(i);
  return p;
}

BlockPartition BlockPartition::parse(const std::string& text) {
  BlockPartition p;
  std::stringstream blocks(text);
  std::string blk;
  while (std::getline(blocks, blk, ';')) {
    std::vector<int> coords;
    std::stringstream items(blk);
    std::string item;
    while (std::getline(items, item, ',')) {
      size_t dash = item.find('-');
      try {
        if (dash == std::string::npos) {
          if (!item.empty()) coords.push_back(std::stoi(item));
        } else {
          int lo = std::stoi(item.substr(0, dash));
          int hi = std::stoi(item.substr(dash + 1));
          if (hi < lo) throw InputError("empty range in partition: " + item);
          for (int c = lo; c <= hi; ++c) coords.push_back(c);
        }
      } catch (const std::logic_error&) {
        throw InputError("bad partition item: '" + item + "'");
      }
    }
    p.blocks.push_back(std::move(coords));
  }
  return p;
}

void BlockPartition::validate(int n) const {
  if (blocks.empty()) throw InputError("partition has no blocks");
  std::vector<int> seen(size_t(n) + 1, 0);
  for (const auto& blk : blocks) {
    if (blk.empty()) throw InputError("partition block is empty");
    for (size_t i = 0; i < blk.size(); ++i) {
      int c = blk[i];
      if (c < 1 || c > n)
        throw InputError("partition coordinate " + std::to_string(c) +
                         " outside [1," + std::to_string(n) + "]");
      if (i > 0 && blk[i - 1] >= c)
        throw InputError("partition block must be strictly increasing");
      if (seen[c]++)
        throw InputError("partition repeats coordinate " + std::to_string(c));
    }
  }
  for (int c = 1; c <= n; ++c)
    if (!seen[c])
      throw InputError("partition misses coordinate " + std::to_string(c));
}

std::string enum_cache_dir() {
  const char* dir = std::getenv("JACOBI_CACHE");
  return dir ? std::string(dir) : std::string();
}

namespace {

struct RegionSpec {
  VarKind kind;
  uint16_t block;
  std::vector<uint64_t> mask;  // one bit per coordinate, 0-based
  int size = 0;
};

// Open-addressing map from packed count profiles to tuple multiplicities.
// Keys are never 0 (some region count is always positive).
struct FlatMap64 {
  std::vector<uint64_t> keys, vals;
  uint64_t mask;
  size_t count = 0;

  explicit FlatMap64(size_t capacity = size_t(1) << 12) {
    size_t cap = 16;
    while (cap < capacity) cap <<= 1;
    keys.assign(cap, 0);
    vals.assign(cap, 0);
    mask = cap - 1;
  }
  void add(uint64_t key, uint64_t delta) {
    size_t i = hash_mix(key) & mask;
    while (true) {
      if (keys[i] == key) {
        vals[i] += delta;
        return;
      }
      if (keys[i] == 0) {
        keys[i] = key;
        vals[i] = delta;
        if (++count * 10 >= keys.size() * 7) grow();
        return;
      }
      i = (i + 1) & mask;
    }
  }
  void grow() {
    std::vector<uint64_t> ok = std::move(keys), ov = std::move(vals);
    keys.assign(ok.size() * 2, 0);
    vals.assign(ok.size() * 2, 0);
    mask = keys.size() - 1;
    for (size_t j = 0; j < ok.size(); ++j) {
      if (!ok[j]) continue;
      size_t i = hash_mix(ok[j]) & mask;
      while (keys[i]) i = (i + 1) & mask;
      keys[i] = ok[j];
      vals[i] = ov[j];
    }
  }
};

std::filesystem::path cache_path_for(const std::string& desc) {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : desc) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json",
                static_cast<unsigned long long>(h));
  return std::filesystem::path(enum_cache_dir()) / name;
}

std::optional<MPoly> cache_load(const std::string& desc) {
  if (desc.empty() || enum_cache_dir().empty()) return std::nullopt;
  std::filesystem::path path = cache_path_for(desc);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_object() || j.value("descriptor", std::string()) != desc)
      return std::nullopt;
    return mpoly_from_json(j.at("poly").dump());
  } catch (...) {
    return std::nullopt;  // unreadable entries are recomputed and replaced
  }
}

void cache_store(const std::string& desc, const MPoly& poly) {
  if (desc.empty() || enum_cache_dir().empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(enum_cache_dir(), ec);
  nlohmann::json j;
  j["schema"] = 1;
  j["descriptor"] = desc;
  j["poly"] = nlohmann::json::parse(to_json(poly));
  std::filesystem::path path = cache_path_for(desc);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, path, ec);
}

std::string code_descriptor(const BinaryCode& C) {
  std::string text = C.to_text();
  for (char& c : text)
    if (c == '\n') c = '|';
  return text;
}

// The shared kernel: walk all 2^(g k) message tuples with Gray-code
// single-generator updates, count coordinates per (region, column label),
// and fold the multiplicities of each count profile into a polynomial.
// `pin` restricts the walk to tuples whose column at the given 0-based
// coordinate equals the given label.
MPoly enumerate_core(const BinaryCode& C, int g,
                     const std::vector<RegionSpec>& regions,
                     std::optional<std::pair<int, int>> pin,
                     const EnumOptions& opt, const std::string& cache_desc) {
  if (g < 1 || g > 12) throw InputError("genus must be in [1,12]");
  int n = C.length(), k = C.dim();
  long gk = long(g) * k;
  if (gk > opt.max_gk) {
    long requested = gk >= 62 ? LONG_MAX : (1L << gk);
    long budget = opt.max_gk >= 62 ? LONG_MAX : (1L << opt.max_gk);
    throw FeasibilityError(
        "enumeration needs 2^" + std::to_string(gk) +
            " tuples, over the guard 2^" + std::to_string(opt.max_gk) +
            " (raise the budget to proceed)",
        requested, budget);
  }
  if (opt.use_cache) {
    if (auto hit = cache_load(cache_desc)) return *hit;
  }

  int G = 1 << g;
  size_t slots = regions.size() * size_t(G);
  uint64_t total = 1ull << gk;
  MPoly out;

  long counted_coords = 0;
  for (const auto& r : regions) counted_coords += r.size;
  if (counted_coords == 0 && k >= 1) {
    // No counted coordinates (e.g. the slice polynomial of a length-1 code):
    // the result is the number of admissible tuples, as a constant.
    int words = (n + 63) / 64;
    std::vector<std::vector<uint64_t>> cur(g, std::vector<uint64_t>(words, 0));
    uint64_t matched = 0, s = 0;
    while (true) {
      bool keep = true;
      if (pin) {
        int wi = pin->first >> 6, bi = pin->first & 63;
        int lab = 0;
        for (int j = 0; j < g; ++j)
          lab |= int((cur[j][wi] >> bi) & 1) << (g - 1 - j);
        keep = (lab == pin->second);
      }
      if (keep) ++matched;
      if (++s == total) break;
      int t = std::countr_zero(s);
      const auto& r = C.generators()[t % k].words();
      for (int w = 0; w < words; ++w) cur[t / k][w] ^= r[w];
    }
    out.add_term(Monomial::one(), Rat(static_cast<unsigned long>(matched)));
    if (opt.use_cache) cache_store(cache_desc, out);
    return out;
  }

  auto build_var = [&](size_t slot) {
    const RegionSpec& r = regions[slot / G];
    VarId v;
    v.kind = r.kind;
    v.block = r.block;
    v.label = uint16_t(slot % G);
    return v;
  };

  bool fast = (n <= 64) && (slots <= 8) && (k >= 1);
  if (fast) {
    std::vector<uint64_t> rowbits(k);
    for (int r = 0; r < k; ++r) rowbits[r] = C.generators()[r].word0();
    std::vector<uint64_t> rmask(regions.size());
    for (size_t r = 0; r < regions.size(); ++r) rmask[r] = regions[r].mask[0];
    std::vector<uint64_t> cur(g, 0);
    FlatMap64 map;
    uint64_t s = 0;
    while (true) {
      bool keep = true;
      if (pin) {
        int lab = 0;
        for (int j = 0; j < g; ++j)
          lab |= int((cur[j] >> pin->first) & 1) << (g - 1 - j);
        keep = (lab == pin->second);
      }
      if (keep) {
        uint64_t key = 0;
        int slot = 0;
        for (size_t r = 0; r < regions.size(); ++r) {
          for (int a = 0; a < G; ++a) {
            uint64_t w = ~0ull;
            for (int j = 0; j < g; ++j)
              w &= ((a >> (g - 1 - j)) & 1) ? cur[j] : ~cur[j];
            key |= uint64_t(std::popcount(w & rmask[r])) << (8 * slot);
            ++slot;
          }
        }
        map.add(key, 1);
      }
      if (++s == total) break;
      int t = std::countr_zero(s);
      cur[t / k] ^= rowbits[t % k];
    }
    for (size_t i = 0; i < map.keys.size(); ++i) {
      if (!map.keys[i]) continue;
      Monomial m;
      for (size_t slot = 0; slot < slots; ++slot) {
        uint32_t e = uint32_t((map.keys[i] >> (8 * slot)) & 0xff);
        if (e) m.factors.emplace_back(build_var(slot), e);
      }
      std::sort(m.factors.begin(), m.factors.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.add_term(m, Rat(static_cast<unsigned long>(map.vals[i])));
    }
  } else if (k >= 1) {
    int words = (n + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(k);
    for (int r = 0; r < k; ++r) rows[r] = C.generators()[r].words();
    std::vector<std::vector<uint64_t>> cur(g, std::vector<uint64_t>(words, 0));
    std::unordered_map<std::string, uint64_t> map;
    std::string key(slots * 2, '\0');
    uint64_t s = 0;
    while (true) {
      bool keep = true;
      if (pin) {
        int wi = pin->first >> 6, bi = pin->first & 63;
        int lab = 0;
        for (int j = 0; j < g; ++j)
          lab |= int((cur[j][wi] >> bi) & 1) << (g - 1 - j);
        keep = (lab == pin->second);
      }
      if (keep) {
        int slot = 0;
        for (const auto& region : regions) {
          for (int a = 0; a < G; ++a) {
            int cnt = 0;
            for (int w = 0; w < words; ++w) {
              uint64_t m = region.mask[w];
              for (int j = 0; j < g; ++j)
                m &= ((a >> (g - 1 - j)) & 1) ? cur[j][w] : ~cur[j][w];
              cnt += std::popcount(m);
            }
            key[2 * slot] = char(cnt & 0xff);
            key[2 * slot + 1] = char((cnt >> 8) & 0xff);
            ++slot;
          }
        }
        ++map[key];
      }
      if (++s == total) break;
      int t = std::countr_zero(s);
      auto& c = cur[t / k];
      const auto& r = rows[t % k];
      for (int w = 0; w < words; ++w) c[w] ^= r[w];
    }
    for (const auto& [packed, mult] : map) {
      Monomial m;
      for (size_t slot = 0; slot < slots; ++slot) {
        uint32_t e = uint32_t(uint8_t(packed[2 * slot])) |
                     (uint32_t(uint8_t(packed[2 * slot + 1])) << 8);
        if (e) m.factors.emplace_back(build_var(slot), e);
      }
      std::sort(m.factors.begin(), m.factors.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.add_term(m, Rat(static_cast<unsigned long>(mult)));
    }
  } else {
    // k = 0: the zero code has the single all-zero tuple, whose column
    // labels are all 0; a pin on any other label matches nothing.
    if (!pin || pin->second == 0) {
      Monomial m;
      for (size_t ri = 0; ri < regions.size(); ++ri)
        if (regions[ri].size > 0)
          m.factors.emplace_back(build_var(ri * G), uint32_t(regions[ri].size));
      std::sort(m.factors.begin(), m.factors.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.add_term(m, Rat(1));
    }
  }

  if (opt.use_cache) cache_store(cache_desc, out);
  return out;
}

RegionSpec make_region(VarKind kind, int block, int n,
                       const std::vector<int>& coords_1based) {
  RegionSpec r;
  r.kind = kind;
  r.block = uint16_t(block);
  r.mask.assign(size_t(n + 63) / 64, 0);
  for (int c : coords_1based) {
    r.mask[(c - 1) >> 6] |= 1ull << ((c - 1) & 63);
    ++r.size;
  }
  return r;
}

std::vector<int> checked_set(const std::vector<int>& T, int n) {
  std::vector<int> t = T;
  std::sort(t.begin(), t.end());
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1 || t[i] > n)
      throw InputError("coordinate " + std::to_string(t[i]) + " outside [1," +
                       std::to_string(n) + "]");
    if (i > 0 && t[i] == t[i - 1])
      throw InputError("repeated coordinate " + std::to_string(t[i]));
  }
  return t;
}

std::string set_descriptor(const std::vector<int>& t) {
  std::string out;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out;
}

}  // namespace

MPoly weight_enumerator(const BinaryCode& C, int g, const EnumOptions& opt) {
  return jacobi_poly(C, {}, g, opt);
}

MPoly jacobi_poly(const BinaryCode& C, const std::vector<int>& T, int g,
                  const EnumOptions& opt) {
  int n = C.length();
  std::vector<int> t = checked_set(T, n);
  std::vector<int> rest;
  {
    size_t ti = 0;
    for (int c = 1; c <= n; ++c) {
      if (ti < t.size() && t[ti] == c)
        ++ti;
      else
        rest.push_back(c);
    }
  }
  std::vector<RegionSpec> regions;
  if (!t.empty()) regions.push_back(make_region(VarKind::Y, 1, n, t));
  if (!rest.empty()) regions.push_back(make_region(VarKind::X, 1, n, rest));
  std::string desc = "schema=1;op=jacobi;g=" + std::to_string(g) +
                     ";code=" + code_descriptor(C) + ";T=" + set_descriptor(t);
  return enumerate_core(C, g, regions, std::nullopt, opt, desc);
}

MPoly split_weight_enumerator(const BinaryCode& C, const BlockPartition& P,
                              int g, const EnumOptions& opt) {
  std::vector<std::vector<int>> empty(P.ell());
  return split_jacobi(C, P, empty, g, opt);
}

MPoly split_jacobi(const BinaryCode& C, const BlockPartition& P,
                   const std::vector<std::vector<int>>& T, int g,
                   const EnumOptions& opt) {
  int n = C.length();
  P.validate(n);
  if (T.size() != P.ell())
    throw InputError("expected one T set per partition block");
  std::vector<RegionSpec> regions;
  std::string tdesc, bdesc;
  for (size_t b = 0; b < P.ell(); ++b) {
    std::vector<int> tb = checked_set(T[b], n);
    for (int c : tb) {
      bool inside = std::binary_search(P.blocks[b].begin(), P.blocks[b].end(), c);
      if (!inside)
        throw InputError("T coordinate " + std::to_string(c) +
                         " is outside partition block " + std::to_string(b + 1));
    }
    std::vector<int> rest;
    for (int c : P.blocks[b])
      if (!std::binary_search(tb.begin(), tb.end(), c)) rest.push_back(c);
    if (!tb.empty())
      regions.push_back(make_region(VarKind::Y, int(b + 1), n, tb));
    if (!rest.empty())
      regions.push_back(make_region(VarKind::X, int(b + 1), n, rest));
    if (b) {
      tdesc += '|';
      bdesc += '|';
    }
    tdesc += set_descriptor(tb);
    bdesc += set_descriptor(P.blocks[b]);
  }
  std::string desc = "schema=1;op=split_jacobi;g=" + std::to_string(g) +
                     ";code=" + code_descriptor(C) + ";blocks=" + bdesc +
                     ";T=" + tdesc;
  return enumerate_core(C, g, regions, std::nullopt, opt, desc);
}

MPoly z_polynomial(const BinaryCode& C, int i, int label, int g,
                   const EnumOptions& opt) {
  int n = C.length();
  if (i < 1 || i > n)
    throw InputError("coordinate " + std::to_string(i) + " outside [1," +
                     std::to_string(n) + "]");
  if (g < 1 || g > 12) throw InputError("genus must be in [1,12]");
  if (label < 0 || label >= (1 << g))
    throw InputError("label " + std::to_string(label) +
                     " outside [0,2^g) for genus " + std::to_string(g));
  std::vector<int> rest;
  for (int c = 1; c <= n; ++c)
    if (c != i) rest.push_back(c);
  std::vector<RegionSpec> regions;
  regions.push_back(make_region(VarKind::X, 1, n, rest));
  std::string desc = "schema=1;op=z;g=" + std::to_string(g) +
                     ";code=" + code_descriptor(C) + ";coord=" +
                     std::to_string(i) + ";label=" + std::to_string(label);
  return enumerate_core(C, g, regions, std::make_pair(i - 1, label), opt, desc);
}

}  // namespace jacobi
