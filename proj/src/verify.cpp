#include "padic_hyper/verify.hpp"

#include <algorithm>
#include <climits>

#include "padic_hyper/curves.hpp"
#include "padic_hyper/error.hpp"
#include "padic_hyper/hyperg.hpp"
#include "padic_hyper/modarith.hpp"

namespace phyper {
namespace {

using Params = std::map<std::string, std::string>;

Params lambda_params(const Context& ctx, int64_t lambda) {
  return {{"lambda", std::to_string(fp(lambda, ctx.p()))}, {"N", std::to_string(ctx.precision())}};
}

Params d_params(const Context& ctx, int64_t d) {
  return {{"d", std::to_string(fp(d, ctx.p()))}, {"N", std::to_string(ctx.precision())}};
}

int min_precision(const Context& ctx) { return ctx.precision() - 2; }

PadicNum rat(const Context& ctx, int64_t num, int64_t den) { return ctx.rational(Rational(num, den)); }

std::optional<std::string> dik_exclusion(int64_t lambda, uint32_t p) {
  int64_t l = fp(lambda, p);
  if (l == 0) return "lambda-zero";
  if (fp(4 * l - 9, p) == 0) return "lambda-9/4";
  return std::nullopt;
}

std::optional<std::string> thm13_exclusion(int64_t lambda, uint32_t p) {
  if (auto r = dik_exclusion(lambda, p)) return r;
  int64_t l = fp(lambda, p);
  if (fp(l - 2, p) == 0) return "lambda-2";
  if (fp(2 * l * l - 6 * l + 3, p) == 0) return "lambda-root-2l^2-6l+3";
  return std::nullopt;
}

std::optional<std::string> jacobi_exclusion(int64_t lambda, uint32_t p) {
  int64_t l = fp(lambda, p);
  if (l == 0) return "lambda-zero";
  if (fp(l * l - 1, p) == 0) return "lambda-pm1";
  return std::nullopt;
}

std::optional<std::string> hessian_exclusion(int64_t d, uint32_t p) {
  int64_t x = fp(d, p);
  if (fp(x + 2, p) == 0) return "d-minus-2";
  if (x == 0) return "d-zero";
  if (fp(x * x % p * x - 1, p) == 0) return "d-cube-one";
  if (!hessian_to_dik(x, p).admissible) return "t-not-square";
  return std::nullopt;
}

// sum_{r=1}^{p-2} omega^r(w) binom(omega-bar^r, omega-bar^r phi) 2G2(r, 1)
PadicNum r_sum(const Context& ctx, int64_t w) {
  const CharacterTable& chars = ctx.chars();
  const int64_t p = ctx.p();
  PadicNum s = PadicNum::exact_zero(ctx.padic());
  for (int64_t r = 1; r <= p - 2; ++r) {
    PadicNum term = chars.value(chars.chi(r), w) * chars.greene_binomial(chars.chi(-r), chars.chi(-r + (p - 1) / 2)) *
                    g22_r(r, 1, ctx).value;
    s = s + term;
  }
  return s;
}

// sum over s in [1, p-2], s != (p-1)/2, of tilde-2G2(s, t)
PadicNum s_sum(const Context& ctx, int64_t t) {
  const int64_t p = ctx.p();
  PadicNum s = PadicNum::exact_zero(ctx.padic());
  for (int64_t k = 1; k <= p - 2; ++k) {
    if (k == (p - 1) / 2) continue;
    s = s + g22_s(k, t, ctx).value;
  }
  return s;
}

PadicNum g_quarter_third(const Context& ctx, int64_t z) {
  HyperParams hp{{Rational(1, 4), Rational(3, 4)}, {Rational(1, 3), Rational(2, 3)}, z};
  return nGn(hp, ctx).value;
}

int64_t thm13_z(int64_t l, uint32_t p) {
  int64_t q = fp(2 * l * l - 6 * l + 3, p);
  int64_t m = fp(l - 2, p);
  return fp_div(q * q % p, fp(4 * l, p) * (m * m % p * m % p) % p, p);
}

Verdict scalar_verdict(std::string id, const Context& ctx, Params params, const PadicNum& lhs, const PadicNum& rhs) {
  Verdict v;
  v.identity = std::move(id);
  v.p = ctx.p();
  v.params = std::move(params);
  compare_scalars(v, lhs, rhs, min_precision(ctx));
  return v;
}

int64_t dik_trace(int64_t lambda, uint32_t p) { return count_dik(lambda, p).trace; }

PadicNum thm12_rhs(const Context& ctx, int64_t l) {
  const int64_t p = ctx.p();
  return rat(ctx, p + 1, p) + rat(ctx, legendre(1 - 6 * l, p) * (p - legendre(-6 * l, p)), p - 1) +
         ctx.integer(legendre(3 * l, p) * dik_trace(l, p));
}

PadicNum thm14_rhs(const Context& ctx, int64_t l) {
  const int64_t p = ctx.p();
  int64_t f3 = legendre(3 * l, p);
  int64_t b = fp(2 * l * l % p * l - 6 * l * l + 3 * l, p);
  return rat(ctx, f3 * (p + 1), p) + rat(ctx, legendre(1 - 6 * l, p) * (p * f3 - legendre(-2, p)), p - 1) +
         ctx.integer(p * legendre(b, p)) * g_quarter_third(ctx, thm13_z(l, p));
}

PadicNum hessian_g(const Context& ctx, int64_t d) {
  const uint32_t p = ctx.p();
  int64_t d3 = fp(d * d % p * d, p);
  HyperParams hp{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 6), Rational(5, 6)}, fp_inv(d3, p)};
  return nGn(hp, ctx).value;
}

int64_t hessian_q(int64_t d, uint32_t p) { return fp(3 * d * d % p * d + 9 * d * d + 9 * d + 6, p); }

}  // namespace

Verdict verify_thm_1_1(const Context& ctx, int64_t lambda) {
  const int64_t p = ctx.p();
  const int64_t l = fp(lambda, p);
  if (auto r = dik_exclusion(l, p)) return make_skip("thm-1.1", p, lambda_params(ctx, l), *r);
  PadicNum lhs = ctx.integer(p * p * legendre(-3 * l, p)) * r_sum(ctx, 6 * l) / ctx.integer(p - 1);
  PadicNum rhs = rat(ctx, legendre(3 * l, p), p - 1) + ctx.integer(dik_trace(l, p));
  return scalar_verdict("thm-1.1", ctx, lambda_params(ctx, l), lhs, rhs);
}

Verdict verify_thm_1_2(const Context& ctx, int64_t lambda) {
  const int64_t p = ctx.p();
  const int64_t l = fp(lambda, p);
  if (auto r = dik_exclusion(l, p)) return make_skip("thm-1.2", p, lambda_params(ctx, l), *r);
  PadicNum lhs = s_sum(ctx, l) / ctx.integer(p - 1);
  return scalar_verdict("thm-1.2", ctx, lambda_params(ctx, l), lhs, thm12_rhs(ctx, l));
}

Verdict verify_thm_1_3(const Context& ctx, int64_t lambda) {
  const int64_t p = ctx.p();
  const int64_t l = fp(lambda, p);
  if (auto r = thm13_exclusion(l, p)) return make_skip("thm-1.3", p, lambda_params(ctx, l), *r);
  PadicNum lhs = ctx.integer(p * p) * r_sum(ctx, 6 * l) / ctx.integer(p - 1);
  PadicNum rhs = rat(ctx, 1, p - 1) + ctx.integer(p * legendre(-3 * (2 * l * l - 6 * l + 3), p)) *
                                          g_quarter_third(ctx, thm13_z(l, p));
  return scalar_verdict("thm-1.3", ctx, lambda_params(ctx, l), lhs, rhs);
}

Verdict verify_thm_1_4(const Context& ctx, int64_t lambda) {
  const int64_t p = ctx.p();
  const int64_t l = fp(lambda, p);
  if (auto r = thm13_exclusion(l, p)) return make_skip("thm-1.4", p, lambda_params(ctx, l), *r);
  PadicNum lhs = ctx.integer(legendre(3 * l, p)) * s_sum(ctx, l) / ctx.integer(p - 1);
  return scalar_verdict("thm-1.4", ctx, lambda_params(ctx, l), lhs, thm14_rhs(ctx, l));
}

Verdict verify_xcheck_1_3_1_1(const Context& ctx, int64_t lambda) {
  const int64_t p = ctx.p();
  const int64_t l = fp(lambda, p);
  if (auto r = thm13_exclusion(l, p)) return make_skip("xcheck-1.3-1.1", p, lambda_params(ctx, l), *r);
  PadicNum lhs = ctx.integer(p * legendre(-3 * (2 * l * l - 6 * l + 3), p)) * g_quarter_third(ctx, thm13_z(l, p));
  PadicNum rhs = ctx.integer(legendre(-3 * l, p) * dik_trace(l, p));
  return scalar_verdict("xcheck-1.3-1.1", ctx, lambda_params(ctx, l), lhs, rhs);
}

Verdict verify_xcheck_1_4_1_2(const Context& ctx, int64_t lambda) {
  const int64_t p = ctx.p();
  const int64_t l = fp(lambda, p);
  if (auto r = thm13_exclusion(l, p)) return make_skip("xcheck-1.4-1.2", p, lambda_params(ctx, l), *r);
  PadicNum rhs = ctx.integer(legendre(3 * l, p)) * thm12_rhs(ctx, l);
  return scalar_verdict("xcheck-1.4-1.2", ctx, lambda_params(ctx, l), thm14_rhs(ctx, l), rhs);
}

Verdict verify_thm_1_5(const Context& ctx, int64_t lambda, int infinity) {
  const int64_t p = ctx.p();
  const int64_t l = fp(lambda, p);
  Params params = lambda_params(ctx, l);
  params["infinity"] = std::to_string(infinity);
  if (auto r = jacobi_exclusion(l, p)) return make_skip("thm-1.5", p, params, *r);
  int64_t z = fp_inv(l * l % p, p);
  HyperParams g1{{Rational(0), Rational(0)}, {Rational(1, 4), Rational(3, 4)}, z};
  HyperParams g2{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}, z};
  PadicNum e1 = ctx.integer(1) + ctx.integer(legendre(2 * l, p)) * nGn(g1, ctx).value;
  PadicNum e2 = ctx.integer(1) + ctx.integer(p * legendre(-2 * l, p)) * nGn(g2, ctx).value;
  PadicNum trace = ctx.integer(count_jacobi(l, p, infinity).trace);

  int A = std::min({trace.precision(), e1.precision(), e2.precision()});
  bool euler = A >= min_precision(ctx) && equals_at(e1, e2, A);
  params["g_form_2"] = e2.truncate(A).str();
  params["euler_equal"] = euler ? "true" : "false";
  Verdict v = scalar_verdict("thm-1.5", ctx, params, trace, e1);
  v.precision = std::min(v.precision, A);
  v.equal = v.equal && euler;
  return v;
}

Verdict verify_thm_1_6(const Context& ctx, int64_t lambda) {
  const int64_t p = ctx.p();
  const int64_t l = fp(lambda, p);
  if (auto r = jacobi_exclusion(l, p)) return make_skip("thm-1.6", p, lambda_params(ctx, l), *r);
  if (fp(l * l - 2, p) == 0) return make_skip("thm-1.6", p, lambda_params(ctx, l), "lambda-sqrt2");
  int64_t l2 = l * l % p;
  int64_t z1 = fp_inv(l2, p);
  int64_t z2 = fp_div(l2 - 1, l2, p);
  HyperParams g1{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}, z1};
  HyperParams g2 = g1;
  g2.t = z2;
  PadicNum lhs = ctx.integer(legendre(-2 * l, p)) * nGn(g1, ctx).value;
  PadicNum rhs = ctx.integer(legendre(1 - l2, p)) * nGn(g2, ctx).value;
  return scalar_verdict("thm-1.6", ctx, lambda_params(ctx, l), lhs, rhs);
}

Verdict verify_thm_1_7(const Context& ctx, int64_t d_in) {
  const int64_t p = ctx.p();
  const int64_t d = fp(d_in, p);
  if (auto r = hessian_exclusion(d, p)) return make_skip("thm-1.7", p, d_params(ctx, d), *r);
  int64_t q = hessian_q(d, p);
  int64_t w = fp_div(3 * fp((d + 2) * (d + 2) % p * (d + 2), p), 2 * fp(d * d + d + 1, p), p);
  PadicNum lhs = ctx.integer(p * p * legendre(-q, p)) * r_sum(ctx, w) / ctx.integer(p - 1);
  PadicNum rhs = ctx.integer(1 - hessian_gamma(p) - hessian_n0(p)) + rat(ctx, legendre(q, p), p - 1) +
                 ctx.integer(p * legendre(-3 * d, p)) * hessian_g(ctx, d);
  Params params = d_params(ctx, d);
  params["gamma"] = std::to_string(hessian_gamma(p));
  params["N0"] = std::to_string(hessian_n0(p));
  return scalar_verdict("thm-1.7", ctx, params, lhs, rhs);
}

Verdict verify_thm_1_8(const Context& ctx, int64_t d_in) {
  const int64_t p = ctx.p();
  const int64_t d = fp(d_in, p);
  if (auto r = hessian_exclusion(d, p)) return make_skip("thm-1.8", p, d_params(ctx, d), *r);
  int64_t q = hessian_q(d, p);
  int64_t t = hessian_to_dik(d, p).t;
  int64_t arg = fp_div(2 * t, (d + 2) * (d + 2) % p, p);
  int64_t fq = legendre(q, p);
  int64_t cubic = fp(6 * d * d % p * d + 18 * d * d + 18 * d, p);
  PadicNum lhs = ctx.integer(fq) * s_sum(ctx, arg) / ctx.integer(p - 1) - rat(ctx, fq * (p + 1), p) -
                 rat(ctx, fq * legendre(-cubic - 11, p) * (p - legendre(-(cubic + 12), p)), p - 1);
  PadicNum rhs = ctx.integer(1 - hessian_gamma(p) - hessian_n0(p)) +
                 ctx.integer(p * legendre(-3 * d, p)) * hessian_g(ctx, d);
  Params params = d_params(ctx, d);
  params["gamma"] = std::to_string(hessian_gamma(p));
  params["N0"] = std::to_string(hessian_n0(p));
  return scalar_verdict("thm-1.8", ctx, params, lhs, rhs);
}

}  // namespace phyper
