#include "doctest.h"
#include "padic_hyper/context.hpp"
#include "padic_hyper/eisenstein.hpp"
#include "padic_hyper/error.hpp"

using namespace phyper;

TEST_CASE("ring arithmetic") {
  PadicContext c{5, 3};
  auto pi = EisensteinElem::pi_power(1, c);
  // pi^(p-1) = -p
  CHECK(pi.pow(4) == EisensteinElem::scalar_int(-5, c));
  CHECK(pi.valuation() == 1);
  CHECK(EisensteinElem::scalar_int(5, c).valuation() == 4);
  CHECK(EisensteinElem::zero(c).is_zero());
  auto x = EisensteinElem::one(c) + pi;
  CHECK(x * x.inverse() == EisensteinElem::one(c));
  auto y = EisensteinElem::scalar_int(3, c) + pi.pow(3);
  CHECK((x * y) - (y * x) == EisensteinElem::zero(c));
  CHECK(x.str().find("pi") != std::string::npos);
  CHECK(EisensteinElem::pi_power(4 * 3, c).is_zero());
}

TEST_CASE("zeta_p is a primitive p-th root of unity") {
  for (uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    PadicContext c{p, 3};
    auto z = zeta_p(c);
    CHECK(z.pow(p) == EisensteinElem::one(c));
    CHECK_FALSE(z == EisensteinElem::one(c));
    CHECK((z - EisensteinElem::one(c)).valuation() == 1);
  }
}

TEST_CASE("gauss sums") {
  // g(phi)^2 = phi(-1) p
  for (uint32_t p : {5u, 7u, 11u, 13u}) {
    auto ctx = Context::create(p, 3);
    EisensteinField f(ctx);
    auto g = f.gauss_sum(ctx->chars().quadratic());
    int64_t sign = (p % 4 == 1) ? 1 : -1;
    CHECK(g * g == EisensteinElem::scalar_int(sign * static_cast<int64_t>(p), ctx->padic()));
    // g(eps) = -1
    CHECK(f.gauss_sum(ctx->chars().trivial()) == EisensteinElem::scalar_int(-1, ctx->padic()));
    // g(chi) g(chi-bar) = chi(-1) p
    for (uint32_t e = 1; e + 1 < p; ++e) {
      auto prod = f.gauss_sum(CharExp{e}) * f.gauss_sum(ctx->chars().conj(CharExp{e}));
      int64_t s = (e % 2 == 0) ? 1 : -1;
      CHECK(prod == EisensteinElem::scalar_int(s * static_cast<int64_t>(p), ctx->padic()));
    }
  }
}

TEST_CASE("gross-koblitz and hasse-davenport checks") {
  for (uint32_t p : {5u, 7u, 11u, 13u}) {
    auto ctx = Context::create(p, 2);
    EisensteinField f(ctx);
    for (int64_t j = 0; j + 1 < p; ++j) {
      auto v = gross_koblitz_check(f, j);
      CHECK(v.equal);
      CHECK(v.precision >= static_cast<int>(p - 1) * 2);
    }
    const auto& chars = ctx->chars();
    for (uint32_t e = 0; e + 1 < p; ++e)
      for (uint32_t psi = 0; psi + 1 < p; ++psi) CHECK(hasse_davenport_check(f, CharExp{e}, CharExp{psi}).equal);
    CHECK_THROWS_AS(hasse_davenport_check(f, CharExp{1}, 2, CharExp{0}), Error);
    (void)chars;
  }
}

TEST_CASE("eisenstein cap") {
  auto ctx = Context::create(53, 2);
  try {
    EisensteinField f(ctx);
    FAIL("expected the cap to refuse p = 53");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudget);
  }
}
