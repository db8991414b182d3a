#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace jacobi {

// Bit vector over F_2. Coordinates are 0-based internally; every public API
// that speaks about code coordinates (puncture, shorten, T sets, ...) is
// 1-based and converts at the boundary.
class GfVector {
 public:
  GfVector() = default;
  explicit GfVector(int n) : n_(n), w_((n + 63) / 64, 0) {}

  // Parses "0110..."; anything but 0/1 is an error.
  static GfVector from_string(std::string_view bits);

  int length() const { return n_; }

  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v) {
    uint64_t m = 1ull << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(int i) { w_[i >> 6] ^= 1ull << (i & 63); }

  GfVector& operator^=(const GfVector& o);
  friend GfVector operator^(GfVector a, const GfVector& b) { return a ^= b; }

  int weight() const;
  bool is_zero() const;
  // Inner product mod 2.
  bool dot(const GfVector& o) const;

  bool operator==(const GfVector& o) const { return n_ == o.n_ && w_ == o.w_; }
  // Total order for canonical sorting (word-wise numeric; an arbitrary but
  // fixed convention, used only internally for deduplication).
  bool operator<(const GfVector& o) const;

  uint64_t hash() const;
  std::string to_string() const;

  // Copy with coordinate i (0-based) removed; later coordinates shift down.
  GfVector without_coordinate(int i) const;

  const std::vector<uint64_t>& words() const { return w_; }
  uint64_t word0() const { return w_.empty() ? 0 : w_[0]; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Type classification flags, all computed exactly by exhaustive scan.
struct CodeClass {
  bool even = false;         // all weights divisible by 2
  bool doubly_even = false;  // all weights divisible by 4
  bool self_dual = false;
  int type = 0;  // 2 = Type II (self-dual doubly even), 1 = Type I
                 // (self-dual even, not doubly even), 0 = neither
};

// A binary linear code, stored as the reduced row echelon generator matrix.
// Two codes are equal iff the spans are equal iff the RREF rows are equal.
class BinaryCode {
 public:
  BinaryCode() = default;
  // Rows are reduced to RREF; zero rows are dropped, so dim() may be smaller
  // than rows.size().
  BinaryCode(int n, const std::vector<GfVector>& rows);

  // Text format: first line "n k", then k lines of n characters from {0,1}.
  static BinaryCode from_text(std::string_view text);
  static BinaryCode from_file(const std::string& path);
  // Accepts "d_plus(n)" for even n >= 4, "g24", "p24".
  static BinaryCode builtin(std::string_view name);

  int length() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<GfVector>& generators() const { return rows_; }

  std::string to_text() const;
  // Hash of the canonical (RREF) form, stable across runs; used as cache key
  // material.
  uint64_t canonical_hash() const;

  bool operator==(const BinaryCode& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }

  BinaryCode dual() const;
  bool is_self_dual() const;
  CodeClass classify() const;

  // 1-based coordinate operations.
  BinaryCode punctured(int i) const;
  BinaryCode shortened(int i) const;
  // Codewords whose i-th coordinate equals a, with that coordinate removed.
  // A plain list: it is a coset of the shortened code, not a code, unless
  // a = 0. Requires dim() <= 26.
  std::vector<GfVector> slice_at(int i, bool a) const;

  // Visits all 2^k codewords (requires k <= 62). Gray-code order: exactly one
  // generator is toggled between consecutive visits.
  void for_each_codeword(const std::function<void(const GfVector&)>& f) const;
  std::vector<GfVector> codewords() const;  // requires dim() <= 26

  // counts[w] = number of codewords of weight w; exhaustive, requires
  // dim() <= 26.
  std::vector<long> weight_distribution() const;

 private:
  int n_ = 0;
  std::vector<GfVector> rows_;
  void reduce();
};

// Standalone RREF of a generator list (the BinaryCode constructor applies it).
std::vector<GfVector> rref_rows(int n, std::vector<GfVector> rows);

// The code d_n^+ for even n >= 4: (n-2)/2 rows of four consecutive ones
// starting at columns 1, 3, 5, ..., plus the alternating row 1010...10.
BinaryCode d_plus(int n);
// Extended [24,12,8] Golay code, generator [I | B] where B is the 12x12
// complement J - A of an icosahedron adjacency matrix A.
BinaryCode golay24();
// A second Type II [24,12] code with minimum weight 4, built from a fixed
// pairs-and-tail generator matrix. Distinct from golay24() (which has
// minimum weight 8).
BinaryCode p24_code();

}  // namespace jacobi
