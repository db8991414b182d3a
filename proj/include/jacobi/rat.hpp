#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace jacobi {

// Exact rational arithmetic is delegated to GMP. All polynomial and matrix
// coefficients in this library are Rat or built from Rat; nothing is ever
// rounded.
using Rat = mpq_class;
using Int = mpz_class;

// Accepts "7", "-7", "3/4", "-3/4". Throws InputError on anything else.
Rat rat_from_string(const std::string& s);

// Canonical form: "p" for integers, "p/q" otherwise, q > 0.
std::string rat_to_string(const Rat& q);

bool rat_is_integer(const Rat& q);

// Exact conversion; nullopt if q is not an integer or does not fit.
std::optional<long> rat_to_long(const Rat& q);

// Exact binomial coefficient; zero when k < 0 or k > n.
Int binomial(long n, long k);

// Falling factorial n (n-1) ... (n-t+1), exact; 1 when t == 0.
Int falling_factorial(long n, long t);

// splitmix64-style mixing, used wherever the library hashes packed keys.
inline uint64_t hash_mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t h, uint64_t v) {
  return hash_mix(h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2)));
}

}  // namespace jacobi
