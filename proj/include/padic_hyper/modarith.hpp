#pragma once

// Word-sized modular arithmetic. Moduli are < 2^62; products go through
// unsigned __int128.

#include <cstdint>
#include <optional>

namespace phyper {

using u128 = unsigned __int128;
using i128 = __int128;

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<u128>(a) * b % m);
}

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b;
  return s >= m ? s - m : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) { return a >= b ? a - b : a + (m - b); }

inline uint64_t neg_mod(uint64_t a, uint64_t m) { return a == 0 ? 0 : m - a; }

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<uint64_t> inv_mod(uint64_t a, uint64_t m);

// Reduce a signed value into [0, m).
inline uint64_t reduce(int64_t a, uint64_t m) {
  i128 r = static_cast<i128>(a) % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<uint64_t>(r);
}

// base^exp; throws kInvalidArgument if the result does not fit below 2^62.
uint64_t checked_pow(uint64_t base, unsigned exp);

bool is_prime(uint64_t n);

// p-adic valuation of a nonzero integer.
int valuation_of(uint64_t n, uint64_t p);

// Smallest generator of (Z/p)^x.
uint64_t primitive_root(uint64_t p);

}  // namespace phyper
