#include "jacobi/cyclo.hpp"

#include <bit>

namespace jacobi {

CycloNum CycloNum::zeta(int k) {
  int r = ((k % 8) + 8) % 8;
  CycloNum out;
  Rat sign = (r >= 4) ? -1 : 1;
  out.c[r % 4] = sign;
  return out;
}

CycloNum CycloNum::sqrt2() {
  CycloNum out;
  out.c[1] = 1;
  out.c[3] = -1;
  return out;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
  // Convolution modulo z^4 = -1.
  Rat r[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.c[j] == 0) continue;
      Rat prod = c[i] * o.c[j];
      int k = i + j;
      if (k >= 4)
        r[k - 4] -= prod;
      else
        r[k] += prod;
    }
  }
  return CycloNum{r[0], r[1], r[2], r[3]};
}

CycloNum CycloNum::galois(int k) const {
  switch (((k % 8) + 8) % 8) {
    case 1:
      return *this;
    case 3:
      return CycloNum{c[0], c[3], -c[2], c[1]};
    case 5:
      return CycloNum{c[0], -c[1], c[2], -c[3]};
    case 7:
      return conj();
    default:
      throw InputError("Galois automorphism index must be odd");
  }
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw MathError("division by zero in Q(zeta_8)");
  CycloNum m = galois(3) * galois(5) * galois(7);
  CycloNum norm = (*this) * m;
  auto r = norm.to_rational();
  if (!r || *r == 0) throw MathError("Galois norm failed to be rational");
  Rat s = 1 / *r;
  return CycloNum{m.c[0] * s, m.c[1] * s, m.c[2] * s, m.c[3] * s};
}

std::string CycloNum::to_string() const {
  // Basis change to 1, i, sqrt2, i*sqrt2.
  Rat parts[4] = {c[0], c[2], (c[1] - c[3]) / 2, (c[1] + c[3]) / 2};
  static const char* names[4] = {"", "i", "sqrt2", "i*sqrt2"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (parts[k] == 0) continue;
    Rat mag = abs(parts[k]);
    bool neg = parts[k] < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0 || mag != 1) {
      out += rat_to_string(mag);
      if (k != 0) out += "*";
    }
    out += names[k];
  }
  return out.empty() ? "0" : out;
}

std::string CycloNum::key() const {
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (k) out += '|';
    out += rat_to_string(c[k]);
  }
  return out;
}

CycloNum cyc_pow(CycloNum base, unsigned e) {
  CycloNum out(1);
  while (e) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

std::optional<MPoly> narrow_rational(const CycloPoly& p) {
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    auto r = c.to_rational();
    if (!r) return std::nullopt;
    out.add_term(m, *r);
  }
  return out;
}

CycloPoly widen(const MPoly& p) {
  CycloPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, CycloNum(c));
  return out;
}

CycloMatrix CycloMatrix::identity(int size) {
  CycloMatrix out(size);
  for (int k = 0; k < size; ++k) out.at(k, k) = CycloNum(1);
  return out;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  if (n != o.n) throw InputError("matrix size mismatch");
  CycloMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const CycloNum& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) += v * o.at(k, j);
      }
    }
  return out;
}

CycloMatrix CycloMatrix::operator*(const CycloNum& s) const {
  CycloMatrix out(n);
  for (size_t k = 0; k < a.size(); ++k) out.a[k] = a[k] * s;
  return out;
}

CycloMatrix CycloMatrix::conj_transpose() const {
  CycloMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

CycloNum CycloMatrix::trace() const {
  CycloNum t;
  for (int k = 0; k < n; ++k) t += at(k, k);
  return t;
}

bool CycloMatrix::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && at(i, j) != CycloNum(1)) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

std::vector<CycloNum> det_one_minus_t(const CycloMatrix& A) {
  int n = A.n;
  // Power sums p_j = tr(A^j).
  std::vector<CycloNum> p(size_t(n) + 1);
  CycloMatrix pw = A;
  for (int j = 1; j <= n; ++j) {
    p[j] = pw.trace();
    if (j < n) pw = pw * A;
  }
  // Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
  std::vector<CycloNum> e(size_t(n) + 1);
  e[0] = CycloNum(1);
  for (int k = 1; k <= n; ++k) {
    CycloNum acc;
    for (int i = 1; i <= k; ++i) {
      CycloNum term = e[k - i] * p[i];
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    e[k] = acc * CycloNum(Rat(1, k));
  }
  // det(I - tA) = sum (-1)^k e_k t^k.
  std::vector<CycloNum> d(size_t(n) + 1);
  for (int k = 0; k <= n; ++k) d[k] = (k % 2) ? -e[k] : e[k];
  return d;
}

std::vector<AffineMap> affine_group(int g) {
  if (g < 1 || g > 4) throw InputError("affine group supported for 1 <= g <= 4");
  int G = 1 << g;
  // Rows of M as g-bit masks, first row = most significant bit of the image.
  std::vector<std::vector<int>> invertible;
  std::vector<int> rows(g);
  long total = 1L << (g * g);
  for (long m = 0; m < total; ++m) {
    for (int r = 0; r < g; ++r)
      rows[r] = int((m >> (g * r)) & (G - 1));
    // Rank over F_2.
    std::vector<int> elim = rows;
    int rank = 0;
    for (int col = g - 1; col >= 0; --col) {
      int pivot = -1;
      for (int r = rank; r < g; ++r)
        if ((elim[r] >> col) & 1) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(elim[rank], elim[pivot]);
      for (int r = 0; r < g; ++r)
        if (r != rank && ((elim[r] >> col) & 1)) elim[r] ^= elim[rank];
      ++rank;
    }
    if (rank == g) invertible.push_back(rows);
  }
  std::vector<AffineMap> out;
  out.reserve(invertible.size() << g);
  for (const auto& M : invertible)
    for (int v = 0; v < G; ++v) {
      AffineMap s;
      s.perm.resize(G);
      for (int a = 0; a < G; ++a) {
        int img = v;
        for (int r = 0; r < g; ++r)
          if (std::popcount(unsigned(M[r] & a)) & 1) img ^= 1 << (g - 1 - r);
        s.perm[a] = uint8_t(img);
      }
      out.push_back(std::move(s));
    }
  return out;
}

CycloMatrix matrix_T(int g) {
  int G = 1 << g;
  CycloNum scale = cyc_pow((CycloNum(1) + CycloNum::i_unit()) * CycloNum(Rat(1, 2)), unsigned(g));
  CycloMatrix out(G);
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b) {
      int sign = std::popcount(unsigned(a & b)) & 1;
      out.at(a, b) = sign ? -scale : scale;
    }
  return out;
}

CycloMatrix matrix_E(int g) {
  int G = 1 << g;
  CycloMatrix out(G);
  for (int a = 0; a < G; ++a)
    out.at(a, a) = (a & 1) ? CycloNum::i_unit() : CycloNum(1);
  return out;
}

CycloMatrix matrix_perm(const AffineMap& s) {
  int G = int(s.perm.size());
  CycloMatrix out(G);
  for (int a = 0; a < G; ++a) out.at(a, s.perm[a]) = CycloNum(1);
  return out;
}

std::vector<CycloNum> char_series_inverse(const CycloMatrix& A, int D) {
  if (D < 0) throw InputError("series truncation degree must be nonnegative");
  return series_inv(det_one_minus_t(A), D);
}

CycloMatrix block_diagonal_pair(const CycloMatrix& A) {
  CycloMatrix out(2 * A.n);
  for (int r = 0; r < A.n; ++r)
    for (int c = 0; c < A.n; ++c) {
      out.at(r, c) = A.at(r, c);
      out.at(r + A.n, c + A.n) = A.at(r, c);
    }
  return out;
}

}  // namespace jacobi
