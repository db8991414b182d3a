#include "jacobi/rat.hpp"

#include "jacobi/error.hpp"

namespace jacobi {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw InputError("bad rational literal: '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  return q.get_str();
}

bool rat_is_integer(const Rat& q) {
  return q.get_den() == 1;
}

std::optional<long> rat_to_long(const Rat& q) {
  if (!rat_is_integer(q)) return std::nullopt;
  const mpz_class& n = q.get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  return n.get_si();
}

Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Int falling_factorial(long n, long t) {
  Int out = 1;
  for (long i = 0; i < t; ++i) out *= (n - i);
  return out;
}

}  // namespace jacobi
