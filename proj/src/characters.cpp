#include "padic_hyper/characters.hpp"

#include <numeric>

#include "padic_hyper/error.hpp"
#include "padic_hyper/modarith.hpp"

namespace phyper {

int legendre(int64_t a, uint32_t p) {
  uint64_t r = reduce(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

CharacterTable::CharacterTable(const PadicContext& ctx) : ctx_(ctx) {
  ctx.validate();
  uint32_t p = ctx.p;
  generator_ = static_cast<uint32_t>(primitive_root(p));
  dlog_.assign(p, 0);
  uint64_t x = 1;
  for (uint32_t k = 0; k + 1 < p; ++k) {
    dlog_[x] = k;
    x = x * generator_ % p;
  }
  uint64_t m = ctx.modulus();
  uint64_t w = phyper::teichmuller_residue(generator_, ctx);
  powers_.resize(p - 1);
  uint64_t acc = 1 % m;
  for (uint32_t k = 0; k + 1 < p; ++k) {
    powers_[k] = acc;
    acc = mul_mod(acc, w, m);
  }
}

CharExp CharacterTable::chi(int64_t m) const { return CharExp{static_cast<uint32_t>(reduce(m, ctx_.p - 1))}; }

CharExp CharacterTable::pow(CharExp a, int64_t k) const {
  uint64_t n = ctx_.p - 1;
  return CharExp{static_cast<uint32_t>(mul_mod(a.m, reduce(k, n), n))};
}

uint32_t CharacterTable::order(CharExp c) const {
  uint32_t n = ctx_.p - 1;
  return n / std::gcd(c.m % n, n);
}

uint32_t CharacterTable::dlog(int64_t a) const {
  uint64_t r = reduce(a, ctx_.p);
  if (r == 0) fail(ErrorCode::kDomain, "discrete log of 0");
  return dlog_[r];
}

uint64_t CharacterTable::teichmuller_residue(int64_t a) const {
  uint64_t r = reduce(a, ctx_.p);
  return r == 0 ? 0 : powers_[dlog_[r]];
}

uint64_t CharacterTable::value_residue(CharExp c, int64_t a) const {
  uint64_t r = reduce(a, ctx_.p);
  if (r == 0) return 0;
  uint64_t n = ctx_.p - 1;
  return powers_[static_cast<uint64_t>(c.m % n) * dlog_[r] % n];
}

PadicNum CharacterTable::value(CharExp c, int64_t a) const {
  uint64_t r = value_residue(c, a);
  if (r == 0) return PadicNum::exact_zero(ctx_);
  return PadicNum::from_residue(r, ctx_.N, 0, ctx_);
}

uint64_t CharacterTable::jacobi_residue(CharExp a, CharExp b) const {
  uint64_t m = ctx_.modulus();
  uint64_t s = 0;
  for (uint32_t x = 2; x < ctx_.p; ++x)
    s = add_mod(s, mul_mod(value_residue(a, x), value_residue(b, 1 - static_cast<int64_t>(x)), m), m);
  return s;
}

PadicNum CharacterTable::jacobi_sum(CharExp a, CharExp b) const {
  return PadicNum::from_residue(jacobi_residue(a, b), ctx_.N, 0, ctx_);
}

PadicNum CharacterTable::greene_binomial(CharExp a, CharExp b) const {
  uint64_t m = ctx_.modulus();
  uint64_t j = mul_mod(value_residue(b, -1), jacobi_residue(a, conj(b)), m);
  return PadicNum::from_residue(j, ctx_.N, -1, ctx_);
}

}  // namespace phyper
