#include "padic_hyper/padics.hpp"

#include <algorithm>

#include "padic_hyper/error.hpp"
#include "padic_hyper/modarith.hpp"

namespace phyper {
namespace {

void same_context(const PadicContext& a, const PadicContext& b) {
  if (!(a == b))
    fail(ErrorCode::kInvalidArgument, "context mismatch: p=" + std::to_string(a.p) + " N=" + std::to_string(a.N) +
                                          " vs p=" + std::to_string(b.p) + " N=" + std::to_string(b.N));
}

// p^k without the N cap; k is small and p^k < 2^62 by the caller's bound.
uint64_t ipow(uint64_t p, int k) {
  uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

}  // namespace

void PadicContext::validate() const {
  if (p < 3 || !is_prime(p)) fail(ErrorCode::kInvalidArgument, "p must be an odd prime, got " + std::to_string(p));
  if (N < 1) fail(ErrorCode::kInvalidArgument, "precision N must be >= 1, got " + std::to_string(N));
  checked_pow(p, static_cast<unsigned>(N));
}

uint64_t PadicContext::modulus() const { return ipow(p, N); }

uint64_t PadicContext::power(int k) const {
  if (k < 0 || k > N) fail(ErrorCode::kInternal, "power index out of range");
  return ipow(p, k);
}

PadicNum PadicNum::exact_zero(const PadicContext& ctx) {
  PadicNum z;
  z.ctx_ = ctx;
  return z;
}

PadicNum PadicNum::zero_mod(const PadicContext& ctx, int abs_precision) {
  PadicNum z;
  z.ctx_ = ctx;
  z.prec_ = abs_precision;
  return z;
}

PadicNum PadicNum::from_int(int64_t value, const PadicContext& ctx) {
  if (value == 0) return exact_zero(ctx);
  uint64_t mag = value < 0 ? static_cast<uint64_t>(-(value + 1)) + 1 : static_cast<uint64_t>(value);
  int v = valuation_of(mag, ctx.p);
  uint64_t m = ctx.modulus();
  uint64_t u = (mag / ipow(ctx.p, v)) % m;
  if (value < 0) u = neg_mod(u, m);
  PadicNum x;
  x.ctx_ = ctx;
  x.zero_ = false;
  x.val_ = v;
  x.prec_ = v + ctx.N;
  x.unit_ = u;
  return x;
}

PadicNum PadicNum::from_residue(uint64_t residue, int digits, int shift, const PadicContext& ctx) {
  if (digits <= 0) return zero_mod(ctx, shift + digits);
  int d = std::min(digits, ctx.N);
  uint64_t m = ctx.power(d);
  residue %= m;
  if (residue == 0) return zero_mod(ctx, shift + d);
  int v = valuation_of(residue, ctx.p);
  PadicNum x;
  x.ctx_ = ctx;
  x.zero_ = false;
  x.val_ = shift + v;
  x.prec_ = shift + d;
  x.unit_ = residue / ipow(ctx.p, v);
  return x;
}

PadicNum PadicNum::operator-() const {
  if (zero_) return *this;
  PadicNum r = *this;
  r.unit_ = neg_mod(unit_, ipow(ctx_.p, prec_ - val_));
  return r;
}

PadicNum operator+(const PadicNum& a, const PadicNum& b) {
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  same_context(a.ctx_, b.ctx_);
  int A = std::min(a.prec_, b.prec_);
  if (a.zero_ && b.zero_) return PadicNum::zero_mod(a.ctx_, A);
  int v = std::min(a.valuation(), b.valuation());
  if (A <= v) return PadicNum::zero_mod(a.ctx_, A);
  int digits = A - v;
  uint64_t p = a.ctx_.p;
  uint64_t m = ipow(p, digits);
  uint64_t sum = 0;
  for (const PadicNum* x : {&a, &b}) {
    if (x->zero_) continue;
    int shift = x->val_ - v;
    if (shift >= digits) continue;
    uint64_t t = mul_mod(x->unit_ % m, ipow(p, shift), m);
    sum = add_mod(sum, t, m);
  }
  return PadicNum::from_residue(sum, digits, v, a.ctx_);
}

PadicNum operator-(const PadicNum& a, const PadicNum& b) { return a + (-b); }

PadicNum operator*(const PadicNum& a, const PadicNum& b) {
  if (a.is_exact_zero()) return PadicNum::exact_zero(b.ctx_.p ? b.ctx_ : a.ctx_);
  if (b.is_exact_zero()) return PadicNum::exact_zero(a.ctx_);
  same_context(a.ctx_, b.ctx_);
  if (a.zero_ || b.zero_) return PadicNum::zero_mod(a.ctx_, a.valuation() + b.valuation());
  PadicNum r;
  r.ctx_ = a.ctx_;
  r.zero_ = false;
  r.val_ = a.val_ + b.val_;
  int rel = std::min(a.prec_ - a.val_, b.prec_ - b.val_);
  uint64_t m = ipow(a.ctx_.p, rel);
  r.unit_ = mul_mod(a.unit_ % m, b.unit_ % m, m);
  r.prec_ = r.val_ + rel;
  return r;
}

PadicNum PadicNum::inverse() const {
  if (is_exact_zero()) fail(ErrorCode::kDomain, "division by exact zero");
  if (zero_) fail(ErrorCode::kPrecision, "division by a value indistinguishable from zero");
  int rel = prec_ - val_;
  uint64_t m = ipow(ctx_.p, rel);
  PadicNum r;
  r.ctx_ = ctx_;
  r.zero_ = false;
  r.val_ = -val_;
  r.unit_ = *inv_mod(unit_, m);
  r.prec_ = r.val_ + rel;
  return r;
}

PadicNum operator/(const PadicNum& a, const PadicNum& b) {
  PadicNum inv = b.inverse();
  return a * inv;
}

PadicNum PadicNum::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  PadicNum result = from_int(1, ctx_);
  PadicNum base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

PadicNum PadicNum::truncate(int abs_precision) const {
  if (abs_precision >= prec_) return *this;
  if (zero_ || abs_precision <= val_) return zero_mod(ctx_, abs_precision);
  PadicNum r = *this;
  r.prec_ = abs_precision;
  r.unit_ = unit_ % ipow(ctx_.p, abs_precision - val_);
  return r;
}

std::optional<uint64_t> PadicNum::residue(int digits) const {
  if (digits < 0 || digits > ctx_.N || digits > prec_) return std::nullopt;
  if (zero_) return 0;
  if (val_ < 0) return std::nullopt;
  if (digits <= val_) return 0;
  uint64_t m = ipow(ctx_.p, digits);
  return mul_mod(unit_ % ipow(ctx_.p, digits - val_), ipow(ctx_.p, val_), m);
}

std::string PadicNum::str() const {
  std::string p = std::to_string(ctx_.p);
  if (zero_) {
    if (prec_ == kExact) return "0";
    return "0 (mod " + p + "^" + std::to_string(prec_) + ")";
  }
  return p + "^" + std::to_string(val_) + " * " + std::to_string(unit_) + " (mod " + p + "^" +
         std::to_string(prec_ - val_) + ")";
}

bool PadicNum::identical(const PadicNum& o) const {
  return ctx_ == o.ctx_ && zero_ == o.zero_ && prec_ == o.prec_ && (zero_ || (val_ == o.val_ && unit_ == o.unit_));
}

bool equals_at(const PadicNum& x, const PadicNum& y, int abs_precision) {
  if (abs_precision > x.precision() || abs_precision > y.precision())
    fail(ErrorCode::kPrecision, "requested precision " + std::to_string(abs_precision) + " exceeds available " +
                                    std::to_string(std::min(x.precision(), y.precision())));
  PadicNum d = x - y;
  return d.is_zero() || d.valuation() >= abs_precision;
}

PadicNum embed_rational(const FpRational& q, const PadicContext& ctx) {
  if (!in_zp(q, ctx.p)) fail(ErrorCode::kDomain, q.str() + " is not in Z_" + std::to_string(ctx.p));
  return embed_qp(q, ctx);
}

PadicNum embed_qp(const Rational& q, const PadicContext& ctx) {
  PadicNum n = PadicNum::from_int(q.num(), ctx);
  if (q.den() == 1) return n;
  return n / PadicNum::from_int(q.den(), ctx);
}

uint64_t teichmuller_residue(int64_t a, const PadicContext& ctx) {
  uint64_t m = ctx.modulus();
  uint64_t x = reduce(a, ctx.p);
  if (x == 0) return 0;
  for (int i = 0; i < ctx.N; ++i) {
    uint64_t y = pow_mod(x, ctx.p, m);
    if (y == x) break;
    x = y;
  }
  return x;
}

PadicNum teichmuller(int64_t a, const PadicContext& ctx) {
  uint64_t r = teichmuller_residue(a, ctx);
  if (r == 0) return PadicNum::exact_zero(ctx);
  return PadicNum::from_residue(r, ctx.N, 0, ctx);
}

}  // namespace phyper
