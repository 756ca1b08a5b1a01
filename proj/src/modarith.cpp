#include "padic_hyper/modarith.hpp"

#include <string>

#include "padic_hyper/error.hpp"

namespace phyper {

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  if (m == 1) return 0;
  uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<uint64_t> inv_mod(uint64_t a, uint64_t m) {
  i128 r0 = m, r1 = a % m;
  i128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    i128 q = r0 / r1;
    i128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) return std::nullopt;
  if (s0 < 0) s0 += m;
  return static_cast<uint64_t>(s0 % m);
}

uint64_t checked_pow(uint64_t base, unsigned exp) {
  constexpr u128 kLimit = u128{1} << 62;
  u128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r *= base;
    if (r >= kLimit)
      fail(ErrorCode::kInvalidArgument, std::to_string(base) + "^" + std::to_string(exp) + " exceeds 2^62");
  }
  return static_cast<uint64_t>(r);
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int valuation_of(uint64_t n, uint64_t p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

uint64_t primitive_root(uint64_t p) {
  if (p == 2) return 1;
  uint64_t phi = p - 1;
  uint64_t factors[64];
  int nf = 0;
  uint64_t n = phi;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors[nf++] = d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors[nf++] = n;
  for (uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (int i = 0; i < nf && ok; ++i) ok = pow_mod(g, phi / factors[i], p) != 1;
    if (ok) return g;
  }
  fail(ErrorCode::kInternal, "no primitive root mod " + std::to_string(p));
}

}  // namespace phyper
