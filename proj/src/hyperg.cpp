#include "padic_hyper/hyperg.hpp"

#include <algorithm>

#include "padic_hyper/error.hpp"
#include "padic_hyper/modarith.hpp"

namespace phyper {
namespace {

void check_params(const HyperParams& hp, uint32_t p) {
  if (hp.top.empty() || hp.top.size() != hp.bot.size())
    fail(ErrorCode::kInvalidArgument, "nGn needs equal-length, nonempty parameter arrays");
  for (const auto* arr : {&hp.top, &hp.bot})
    for (const Rational& q : *arr)
      if (!in_zp(q, p)) fail(ErrorCode::kDomain, "parameter " + q.str() + " is not in Z_" + std::to_string(p));
}

// One term of the sum, as (-p)-exponent and unit residue mod p^N (the
// (-1)^e of (-p)^e is folded into the unit).
struct Term {
  int exponent = 0;
  uint64_t unit = 0;
};

struct Prepared {
  std::vector<Rational> frac_a;      // <a_i>
  std::vector<Rational> frac_mb;     // <-b_i>
  uint64_t denominator_inverse = 1;  // (prod Gamma(<a_i>) Gamma(<-b_i>))^{-1}
};

Prepared prepare(const HyperParams& hp, const Context& ctx) {
  Prepared pr;
  uint64_t m = ctx.padic().modulus();
  uint64_t den = 1 % m;
  for (size_t i = 0; i < hp.top.size(); ++i) {
    pr.frac_a.push_back(hp.top[i].frac());
    pr.frac_mb.push_back((-hp.bot[i]).frac());
    den = mul_mod(den, ctx.gamma().gamma_residue(pr.frac_a.back()), m);
    den = mul_mod(den, ctx.gamma().gamma_residue(pr.frac_mb.back()), m);
  }
  pr.denominator_inverse = *inv_mod(den, m);
  return pr;
}

Term term(const HyperParams& hp, const Prepared& pr, int64_t j, const Context& ctx) {
  const uint32_t p = ctx.p();
  const uint64_t m = ctx.padic().modulus();
  const size_t n = hp.top.size();
  const Rational x(j, p - 1);
  Term t;
  uint64_t u = pr.denominator_inverse;
  for (size_t i = 0; i < n; ++i) {
    Rational lo = pr.frac_a[i] - x;
    Rational hi = pr.frac_mb[i] + x;
    t.exponent += static_cast<int>(-lo.floor() - hi.floor());
    u = mul_mod(u, ctx.gamma().gamma_residue(lo.frac()), m);
    u = mul_mod(u, ctx.gamma().gamma_residue(hi.frac()), m);
  }
  bool negative = (j * static_cast<int64_t>(n)) % 2 != 0;
  if (t.exponent & 1) negative = !negative;
  u = mul_mod(u, ctx.chars().value_residue(ctx.chars().chi(-j), hp.t), m);
  t.unit = negative ? neg_mod(u, m) : u;
  return t;
}

uint64_t reduced_arg(int64_t t, uint32_t p) { return reduce(t, p); }

}  // namespace

GValue nGn(const HyperParams& params, const Context& ctx) {
  const uint32_t p = ctx.p();
  const int N = ctx.precision();
  check_params(params, p);
  GValue out;
  if (reduced_arg(params.t, p) == 0) {
    out.value = PadicNum::exact_zero(ctx.padic());
    out.precision_used = PadicNum::kExact;
    return out;
  }
  Prepared pr = prepare(params, ctx);
  const int n = static_cast<int>(params.top.size());
  std::vector<Term> terms;
  terms.reserve(p - 1);
  int e_min = 0;
  for (int64_t j = 0; j + 1 < static_cast<int64_t>(p); ++j) {
    Term t = term(params, pr, j, ctx);
    if (t.exponent < -2 * n || t.exponent > 2 * n)
      fail(ErrorCode::kInternal, "(-p)-exponent " + std::to_string(t.exponent) + " outside [-2n, 2n]");
    e_min = std::min(e_min, t.exponent);
    terms.push_back(t);
  }
  if (N + e_min <= 0)
    fail(ErrorCode::kPrecision, "precision underflow: N = " + std::to_string(N) + " with (-p)-exponent " +
                                    std::to_string(e_min));
  // Scale every term by p^{-e_min} so the accumulator lives in Z_p / p^N.
  const uint64_t m = ctx.padic().modulus();
  uint64_t acc = 0;
  for (const Term& t : terms) {
    int shift = t.exponent - e_min;
    if (shift >= N) continue;
    acc = add_mod(acc, mul_mod(t.unit, ctx.padic().power(shift), m), m);
  }
  acc = mul_mod(acc, neg_mod(*inv_mod(p - 1, m), m), m);
  out.value = PadicNum::from_residue(acc, N, e_min, ctx.padic());
  out.min_term_valuation = e_min;
  out.precision_used = N + e_min;
  return out;
}

PadicNum nGn_term(const HyperParams& params, int64_t j, const Context& ctx) {
  const uint32_t p = ctx.p();
  check_params(params, p);
  if (reduced_arg(params.t, p) == 0) return PadicNum::exact_zero(ctx.padic());
  Prepared pr = prepare(params, ctx);
  Term t = term(params, pr, j, ctx);
  return PadicNum::from_residue(t.unit, ctx.precision(), t.exponent, ctx.padic());
}

HyperParams g22_r_params(int64_t r, int64_t t, uint32_t p) {
  const int64_t q = p - 1;
  Rational x(r, q), h(r, 2 * q), half(1, 2);
  HyperParams hp;
  hp.top = {x, -half - x};
  hp.bot = {-h, -h - half};
  hp.t = t;
  return hp;
}

GValue g22_r(int64_t r, int64_t t, const Context& ctx) { return nGn(g22_r_params(r, t, ctx.p()), ctx); }

HyperParams g22_s_params(int64_t s, int64_t t, uint32_t p) {
  uint64_t six_t = reduce(static_cast<int64_t>(reduce(t, p)) * 6, p);
  if (six_t == 0) fail(ErrorCode::kDomain, "tilde 2G2 needs 6t != 0 in F_" + std::to_string(p));
  const int64_t q = p - 1;
  Rational x(s, q), half(1, 2);
  HyperParams hp;
  hp.top = {Rational(0), -half - x};
  hp.bot = {x, Rational(-2 * s, q)};
  hp.t = static_cast<int64_t>(*inv_mod(six_t, p));
  return hp;
}

GValue g22_s(int64_t s, int64_t t, const Context& ctx) { return nGn(g22_s_params(s, t, ctx.p()), ctx); }

}  // namespace phyper
