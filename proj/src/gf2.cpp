#include "jacobi/gf2.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "jacobi/error.hpp"
#include "jacobi/rat.hpp"

namespace jacobi {

GfVector GfVector::from_string(std::string_view bits) {
  GfVector v(static_cast<int>(bits.size()));
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(static_cast<int>(i), true);
    else if (bits[i] != '0')
      throw InputError("bit vector may contain only 0/1, got '" +
                       std::string(1, bits[i]) + "'");
  }
  return v;
}

GfVector& GfVector::operator^=(const GfVector& o) {
  if (n_ != o.n_) throw InputError("xor of vectors of different length");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

int GfVector::weight() const {
  int s = 0;
  for (uint64_t w : w_) s += std::popcount(w);
  return s;
}

bool GfVector::is_zero() const {
  for (uint64_t w : w_)
    if (w) return false;
  return true;
}

bool GfVector::dot(const GfVector& o) const {
  if (n_ != o.n_) throw InputError("dot of vectors of different length");
  uint64_t acc = 0;
  for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
  return std::popcount(acc) & 1;
}

bool GfVector::operator<(const GfVector& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return w_ < o.w_;
}

uint64_t GfVector::hash() const {
  uint64_t h = hash_mix(static_cast<uint64_t>(n_));
  for (uint64_t w : w_) h = hash_combine(h, w);
  return h;
}

std::string GfVector::to_string() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

GfVector GfVector::without_coordinate(int i) const {
  GfVector r(n_ - 1);
  for (int j = 0, k = 0; j < n_; ++j) {
    if (j == i) continue;
    if (get(j)) r.set(k, true);
    ++k;
  }
  return r;
}

std::vector<GfVector> rref_rows(int n, std::vector<GfVector> rows) {
  for (const GfVector& r : rows)
    if (r.length() != n) throw InputError("generator row length mismatch");
  size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && !rows[piv].get(col)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

BinaryCode::BinaryCode(int n, const std::vector<GfVector>& rows) : n_(n) {
  if (n < 0) throw InputError("negative code length");
  rows_ = rref_rows(n, rows);
}

BinaryCode BinaryCode::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0, k = 0;
  if (!(in >> n >> k)) throw InputError("code file: expected header 'n k'");
  if (n <= 0 || k < 0 || k > n)
    throw InputError("code file: bad dimensions n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  std::vector<GfVector> rows;
  std::string line;
  for (int r = 0; r < k; ++r) {
    if (!(in >> line))
      throw InputError("code file: expected " + std::to_string(k) + " rows");
    if (static_cast<int>(line.size()) != n)
      throw InputError("code file: row " + std::to_string(r + 1) + " has " +
                       std::to_string(line.size()) + " symbols, expected " +
                       std::to_string(n));
    rows.push_back(GfVector::from_string(line));
  }
  return BinaryCode(n, rows);
}

BinaryCode BinaryCode::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open code file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

BinaryCode BinaryCode::builtin(std::string_view name) {
  if (name == "g24") return golay24();
  if (name == "p24") return p24_code();
  if (name.starts_with("d_plus(") && name.ends_with(")")) {
    std::string inner(name.substr(7, name.size() - 8));
    int n = 0;
    try {
      size_t pos = 0;
      n = std::stoi(inner, &pos);
      if (pos != inner.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InputError("bad builtin length in '" + std::string(name) + "'");
    }
    return d_plus(n);
  }
  throw InputError("unknown builtin code '" + std::string(name) +
                   "' (expected d_plus(n), g24, p24)");
}

std::string BinaryCode::to_text() const {
  std::ostringstream out;
  out << n_ << ' ' << dim() << '\n';
  for (const GfVector& r : rows_) out << r.to_string() << '\n';
  return out.str();
}

uint64_t BinaryCode::canonical_hash() const {
  uint64_t h = hash_mix(static_cast<uint64_t>(n_) * 131 + dim());
  for (const GfVector& r : rows_) h = hash_combine(h, r.hash());
  return h;
}

BinaryCode BinaryCode::dual() const {
  // From RREF: one dual generator per free column f, with a 1 at f and, for
  // each pivot row r, G[r][f] at that row's pivot column.
  std::vector<int> pivot_col(rows_.size());
  std::vector<bool> is_pivot(n_, false);
  for (size_t r = 0; r < rows_.size(); ++r) {
    int c = 0;
    while (c < n_ && !rows_[r].get(c)) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  std::vector<GfVector> out;
  for (int f = 0; f < n_; ++f) {
    if (is_pivot[f]) continue;
    GfVector v(n_);
    v.set(f, true);
    for (size_t r = 0; r < rows_.size(); ++r)
      if (rows_[r].get(f)) v.set(pivot_col[r], true);
    out.push_back(std::move(v));
  }
  return BinaryCode(n_, out);
}

bool BinaryCode::is_self_dual() const {
  if (2 * dim() != n_) return false;
  return *this == dual();
}

CodeClass BinaryCode::classify() const {
  CodeClass c;
  c.even = true;
  c.doubly_even = true;
  for_each_codeword([&](const GfVector& w) {
    int wt = w.weight();
    if (wt % 2) c.even = false;
    if (wt % 4) c.doubly_even = false;
  });
  c.self_dual = is_self_dual();
  if (c.self_dual && c.doubly_even)
    c.type = 2;
  else if (c.self_dual && c.even)
    c.type = 1;
  return c;
}

BinaryCode BinaryCode::punctured(int i) const {
  if (i < 1 || i > n_) throw InputError("puncture coordinate out of range");
  std::vector<GfVector> rows;
  rows.reserve(rows_.size());
  for (const GfVector& r : rows_) rows.push_back(r.without_coordinate(i - 1));
  return BinaryCode(n_ - 1, rows);
}

BinaryCode BinaryCode::shortened(int i) const {
  if (i < 1 || i > n_) throw InputError("shorten coordinate out of range");
  int i0 = i - 1;
  // Eliminate so at most one generator has a 1 at i0, drop it, puncture.
  std::vector<GfVector> rows = rows_;
  int hot = -1;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].get(i0)) continue;
    if (hot < 0)
      hot = static_cast<int>(r);
    else
      rows[r] ^= rows[hot];
  }
  std::vector<GfVector> out;
  for (size_t r = 0; r < rows.size(); ++r)
    if (static_cast<int>(r) != hot) out.push_back(rows[r].without_coordinate(i0));
  return BinaryCode(n_ - 1, out);
}

std::vector<GfVector> BinaryCode::slice_at(int i, bool a) const {
  if (i < 1 || i > n_) throw InputError("slice coordinate out of range");
  if (dim() > 26)
    throw FeasibilityError("slice_at requires dim <= 26", dim(), 26);
  std::vector<GfVector> out;
  for_each_codeword([&](const GfVector& w) {
    if (w.get(i - 1) == a) out.push_back(w.without_coordinate(i - 1));
  });
  std::sort(out.begin(), out.end());
  return out;
}

void BinaryCode::for_each_codeword(
    const std::function<void(const GfVector&)>& f) const {
  int k = dim();
  if (k > 62) throw FeasibilityError("codeword enumeration requires k <= 62", k, 62);
  GfVector cur(n_);
  f(cur);
  uint64_t total = 1ull << k;
  for (uint64_t m = 1; m < total; ++m) {
    cur ^= rows_[std::countr_zero(m)];
    f(cur);
  }
}

std::vector<GfVector> BinaryCode::codewords() const {
  if (dim() > 26)
    throw FeasibilityError("codeword list requires dim <= 26", dim(), 26);
  std::vector<GfVector> out;
  out.reserve(1ull << dim());
  for_each_codeword([&](const GfVector& w) { out.push_back(w); });
  return out;
}

std::vector<long> BinaryCode::weight_distribution() const {
  if (dim() > 26)
    throw FeasibilityError("weight distribution requires dim <= 26", dim(), 26);
  std::vector<long> counts(n_ + 1, 0);
  for_each_codeword([&](const GfVector& w) { ++counts[w.weight()]; });
  return counts;
}

BinaryCode d_plus(int n) {
  if (n < 4 || n % 2) throw InputError("d_plus(n) requires even n >= 4");
  std::vector<GfVector> rows;
  for (int j = 0; 2 * j + 3 < n; ++j) {
    GfVector r(n);
    for (int c = 2 * j; c < 2 * j + 4; ++c) r.set(c, true);
    rows.push_back(std::move(r));
  }
  GfVector alt(n);
  for (int c = 0; c < n; c += 2) alt.set(c, true);
  rows.push_back(std::move(alt));
  return BinaryCode(n, rows);
}

BinaryCode golay24() {
  // Icosahedron on vertices 0..11: apex 0, upper pentagon 1..5, lower
  // pentagon 6..10, apex 11. B = J - A (ones on the diagonal), G = [I | B].
  bool adj[12][12] = {};
  auto link = [&](int a, int b) { adj[a][b] = adj[b][a] = true; };
  for (int i = 1; i <= 5; ++i) link(0, i);
  for (int i = 6; i <= 10; ++i) link(11, i);
  for (int i = 1; i <= 5; ++i) link(i, i % 5 + 1);
  for (int i = 6; i <= 10; ++i) link(i, (i - 5) % 5 + 6);
  for (int i = 1; i <= 5; ++i) {
    link(i, i + 5);
    link(i, i % 5 + 6);
  }
  std::vector<GfVector> rows;
  for (int r = 0; r < 12; ++r) {
    GfVector v(24);
    v.set(r, true);
    for (int c = 0; c < 12; ++c)
      if (!adj[r][c]) v.set(12 + c, true);
    rows.push_back(std::move(v));
  }
  return BinaryCode(24, rows);
}

BinaryCode p24_code() {
  static const char* const kRows[12] = {
      "100101010101010101010110",
      "010101010101000000000011",
      "001100000000010101010101",
      "000011000000010101010101",
      "000000110000010101010101",
      "000000001100010101010101",
      "000000000011010101010101",
      "000000000000110000000011",
      "000000000000001100000011",
      "000000000000000011000011",
      "000000000000000000110011",
      "000000000000000000001111",
  };
  std::vector<GfVector> rows;
  for (const char* r : kRows) rows.push_back(GfVector::from_string(r));
  return BinaryCode(24, rows);
}

}  // namespace jacobi
