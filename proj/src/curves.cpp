#include "padic_hyper/curves.hpp"

#include "padic_hyper/error.hpp"
#include "padic_hyper/hyperg.hpp"
#include "padic_hyper/modarith.hpp"

namespace phyper {
namespace {

void check_prime(uint32_t p) {
  if (p < 3 || !is_prime(p)) fail(ErrorCode::kInvalidArgument, "p must be an odd prime, got " + std::to_string(p));
}

int64_t mulp(int64_t a, int64_t b, uint32_t p) { return static_cast<int64_t>(mul_mod(fp(a, p), fp(b, p), p)); }

int64_t cube(int64_t a, uint32_t p) { return mulp(mulp(a, a, p), a, p); }

CountResult finish(int64_t affine, int64_t infinity, uint32_t p, std::string convention) {
  CountResult r;
  r.infinity_points = infinity;
  r.total = affine + infinity;
  r.trace = static_cast<int64_t>(p) + 1 - r.total;
  r.convention = std::move(convention);
  return r;
}

int64_t weierstrass_affine(int64_t a2, int64_t a4, int64_t a6, uint32_t p) {
  int64_t s = 0;
  for (int64_t x = 0; x < p; ++x) {
    int64_t x2 = mulp(x, x, p);
    int64_t f = fp(mulp(x2, x, p) + mulp(a2, x2, p) + mulp(a4, x, p) + a6, p);
    s += 1 + legendre(f, p);
  }
  return s;
}

}  // namespace

int64_t fp(int64_t a, uint32_t p) { return static_cast<int64_t>(reduce(a, p)); }

int64_t fp_inv(int64_t a, uint32_t p) {
  auto r = inv_mod(reduce(a, p), p);
  if (!r) fail(ErrorCode::kDomain, "division by zero in F_" + std::to_string(p));
  return static_cast<int64_t>(*r);
}

int64_t fp_div(int64_t a, int64_t b, uint32_t p) { return mulp(a, fp_inv(b, p), p); }

bool fp_is_square(int64_t a, uint32_t p) { return legendre(a, p) == 1; }

const char* family_name(Family f) {
  switch (f) {
    case Family::kDIK: return "dik";
    case Family::kJacobiQuartic: return "jacobi";
    case Family::kHessian: return "hessian";
    case Family::kShortWeierstrass: return "short-weierstrass";
    case Family::kWeierstrassA2: return "weierstrass";
  }
  return "unknown";
}

int64_t cubic_discriminant(int64_t a2, int64_t a4, int64_t a6, uint32_t p) {
  int64_t b = fp(a2, p), c = fp(a4, p), d = fp(a6, p);
  int64_t t1 = mulp(mulp(b, b, p), mulp(c, c, p), p);
  int64_t t2 = mulp(4, cube(c, p), p);
  int64_t t3 = mulp(4, mulp(cube(b, p), d, p), p);
  int64_t t4 = mulp(27, mulp(d, d, p), p);
  int64_t t5 = mulp(18, mulp(mulp(b, c, p), d, p), p);
  return fp(t1 - t2 - t3 - t4 + t5, p);
}

bool dik_nonsingular(int64_t lambda, uint32_t p) {
  return mulp(mulp(432, mulp(lambda, lambda, p), p), 4 * fp(lambda, p) - 9, p) != 0;
}

bool jacobi_nonsingular(int64_t lambda, uint32_t p) {
  int64_t l2m1 = fp(mulp(lambda, lambda, p) - 1, p);
  return mulp(256, mulp(l2m1, l2m1, p), p) != 0;
}

bool hessian_nonsingular(int64_t d, uint32_t p) {
  int64_t e = fp(1 - cube(d, p), p);
  return mulp(27, cube(e, p), p) != 0;
}

int64_t dik_j_invariant(int64_t lambda, uint32_t p) {
  int64_t num = mulp(mulp(4 * 1728 % p, lambda, p), cube(fp(lambda, p) - 2, p), p);
  return fp_div(num, 4 * fp(lambda, p) - 9, p);
}

CountResult count_weierstrass(int64_t a2, int64_t a4, int64_t a6, uint32_t p) {
  check_prime(p);
  if (cubic_discriminant(a2, a4, a6, p) == 0)
    fail(ErrorCode::kDomain, "singular curve y^2 = x^3 + " + std::to_string(fp(a2, p)) + "x^2 + " +
                                 std::to_string(fp(a4, p)) + "x + " + std::to_string(fp(a6, p)) + " over F_" +
                                 std::to_string(p));
  return finish(weierstrass_affine(a2, a4, a6, p), 1, p, "weierstrass-1-at-infinity");
}

CountResult count_dik(int64_t lambda, uint32_t p) {
  check_prime(p);
  if (!dik_nonsingular(lambda, p))
    fail(ErrorCode::kDomain, "DIK curve singular at lambda = " + std::to_string(fp(lambda, p)) + " over F_" +
                                 std::to_string(p));
  // x^3 + 3l(x+1)^2 = x^3 + 3l x^2 + 6l x + 3l
  int64_t l = fp(lambda, p);
  return finish(weierstrass_affine(3 * l, 6 * l, 3 * l, p), 1, p, "dik-1-at-infinity");
}

int64_t jacobi_affine_count(int64_t lambda, uint32_t p) {
  check_prime(p);
  int64_t s = 0;
  for (int64_t u = 0; u < p; ++u) {
    int64_t u2 = mulp(u, u, p);
    s += 1 + legendre(mulp(u2, u2, p) + mulp(2 * fp(lambda, p), u2, p) + 1, p);
  }
  return s;
}

CountResult count_jacobi(int64_t lambda, uint32_t p, int infinity_convention) {
  check_prime(p);
  if (infinity_convention < 0 || infinity_convention > 2)
    fail(ErrorCode::kInvalidArgument, "infinity convention must be 0, 1 or 2");
  if (fp(lambda, p) == 0) fail(ErrorCode::kDomain, "Jacobi quartic: lambda = 0 is excluded");
  if (!jacobi_nonsingular(lambda, p))
    fail(ErrorCode::kDomain, "Jacobi quartic singular at lambda = " + std::to_string(fp(lambda, p)) + " over F_" +
                                 std::to_string(p));
  return finish(jacobi_affine_count(lambda, p), infinity_convention, p,
                "jacobi-" + std::to_string(infinity_convention) + "-at-infinity");
}

CountResult count_hessian(int64_t d, uint32_t p) {
  check_prime(p);
  if (!hessian_nonsingular(d, p))
    fail(ErrorCode::kDomain, "Hessian curve singular at d = " + std::to_string(fp(d, p)) + " over F_" +
                                 std::to_string(p));
  std::vector<int64_t> cubes(p);
  for (int64_t y = 0; y < p; ++y) cubes[y] = cube(y, p);
  int64_t dd = mulp(3, d, p);
  int64_t affine = 0;
  for (int64_t x = 0; x < p; ++x) {
    int64_t c = fp(cubes[x] + 1, p);
    int64_t k = mulp(dd, x, p);
    for (int64_t y = 0; y < p; ++y)
      if (fp(cubes[y] + c - k * y, p) == 0) ++affine;
  }
  int64_t inf = p % 3 == 1 ? 3 : 1;
  return finish(affine, inf, p, "hessian-projective");
}

CountResult count(const CurveSpec& spec, int infinity_convention) {
  auto need = [&](size_t n) {
    if (spec.params.size() != n)
      fail(ErrorCode::kInvalidArgument, std::string(family_name(spec.family)) + " takes " + std::to_string(n) +
                                            " parameter(s), got " + std::to_string(spec.params.size()));
  };
  switch (spec.family) {
    case Family::kDIK: need(1); return count_dik(spec.params[0], spec.p);
    case Family::kJacobiQuartic: need(1); return count_jacobi(spec.params[0], spec.p, infinity_convention);
    case Family::kHessian: need(1); return count_hessian(spec.params[0], spec.p);
    case Family::kShortWeierstrass: need(2); return count_weierstrass(0, spec.params[0], spec.params[1], spec.p);
    case Family::kWeierstrassA2:
      need(3);
      return count_weierstrass(spec.params[0], spec.params[1], spec.params[2], spec.p);
  }
  fail(ErrorCode::kInvalidArgument, "unknown curve family");
}

HessianToDik hessian_to_dik(int64_t d, uint32_t p) {
  check_prime(p);
  int64_t dd = fp(d, p);
  if (fp(dd + 2, p) == 0) fail(ErrorCode::kDomain, "Hessian map needs d != -2");
  if (dd == 0) fail(ErrorCode::kDomain, "Hessian map needs d != 0");
  if (cube(dd, p) == 1) fail(ErrorCode::kDomain, "Hessian map needs d^3 != 1");
  int64_t q = fp(mulp(dd, dd, p) + dd + 1, p);
  HessianToDik r;
  r.k = fp_div(mulp(4, q, p), 3, p);
  r.lambda = fp_div(cube(dd + 2, p), mulp(3, r.k, p), p);
  r.t = fp_div(q, mulp(3, dd + 2, p), p);
  r.admissible = r.t != 0 && fp_is_square(r.t, p);
  return r;
}

int hessian_gamma(uint32_t p) { return p % 3 == 1 ? 5 - 6 * legendre(-3, p) : 1; }

int hessian_n0(uint32_t p) { return (p % 12 == 1 || p % 12 == 11) ? 2 : 0; }

PadicNum mccarthy_trace(int64_t a, int64_t b, const Context& ctx) {
  const uint32_t p = ctx.p();
  if (fp(a, p) == 0 || fp(b, p) == 0) fail(ErrorCode::kDomain, "McCarthy trace formula needs a, b != 0");
  int64_t z = fp_div(mulp(-27, mulp(b, b, p), p), mulp(4, cube(a, p), p), p);
  HyperParams hp{{Rational(1, 4), Rational(3, 4)}, {Rational(1, 3), Rational(2, 3)}, z};
  GValue g = nGn(hp, ctx);
  return ctx.integer(static_cast<int64_t>(p) * legendre(b, p)) * g.value;
}

}  // namespace phyper
