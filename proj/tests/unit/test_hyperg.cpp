#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "padic_hyper/context.hpp"
#include "padic_hyper/error.hpp"
#include "padic_hyper/hyperg.hpp"

using namespace phyper;

namespace {

std::vector<oracle::Frac> to_oracle(const std::vector<FpRational>& v) {
  std::vector<oracle::Frac> out;
  for (const auto& q : v) out.push_back({q.num(), q.den()});
  return out;
}

FpRational random_param(std::mt19937_64& rng, uint32_t p) {
  static const int64_t dens[] = {1, 2, 3, 4, 5, 6, 8, 12};
  for (;;) {
    int64_t den = dens[rng() % 8];
    if (den % p == 0) continue;
    int64_t num = static_cast<int64_t>(rng() % 25) - 12;
    return Rational(num, den);
  }
}

}  // namespace

TEST_CASE("nGn agrees with the brute-force definition") {
  std::mt19937_64 rng(20240611);
  for (uint32_t p : {5u, 7u, 11u, 13u}) {
    for (int N : {2, 3}) {
      auto ctx = Context::create(p, N);
      for (int trial = 0; trial < 12; ++trial) {
        size_t n = 1 + rng() % 3;
        HyperParams hp;
        for (size_t i = 0; i < n; ++i) {
          hp.top.push_back(random_param(rng, p));
          hp.bot.push_back(random_param(rng, p));
        }
        hp.t = 1 + static_cast<int64_t>(rng() % (p - 1));
        GValue g = nGn(hp, *ctx);
        auto ref = oracle::nGn(to_oracle(hp.top), to_oracle(hp.bot), hp.t, p, N);
        CAPTURE(p);
        CAPTURE(N);
        CAPTURE(trial);
        CHECK(g.min_term_valuation == ref.shift);
        CHECK(g.precision_used == N + ref.shift);
        auto expect = PadicNum::from_residue(static_cast<uint64_t>(ref.residue), N, ref.shift, ctx->padic());
        CHECK(equals_at(g.value, expect, g.precision_used));
        CHECK(g.min_term_valuation >= -static_cast<int>(n));
      }
    }
  }
}

TEST_CASE("t = 0 gives exact zero") {
  auto ctx = Context::create(7, 3);
  HyperParams hp{{Rational(1, 4), Rational(3, 4)}, {Rational(0), Rational(1, 2)}, 0};
  GValue g = nGn(hp, *ctx);
  CHECK(g.value.is_exact_zero());
  CHECK(g.value.str() == "0");
}

TEST_CASE("summands depend only on j mod p-1") {
  for (uint32_t p : {5u, 11u}) {
    auto ctx = Context::create(p, 3);
    HyperParams hp{{Rational(1, 4), Rational(3, 4)}, {Rational(1, 3), Rational(2, 3)}, 3};
    int64_t q = p - 1;
    for (int64_t j = 0; j < q; ++j) {
      auto base = nGn_term(hp, j, *ctx);
      CHECK(nGn_term(hp, j + q, *ctx).identical(base));
      CHECK(nGn_term(hp, j - q, *ctx).identical(base));
      CHECK(nGn_term(hp, j + 5 * q, *ctx).identical(base));
    }
  }
}

TEST_CASE("precision consistency across N") {
  for (uint32_t p : {5u, 7u, 13u}) {
    auto c3 = Context::create(p, 3);
    auto c5 = Context::create(p, 5);
    for (int64_t t = 1; t < p; ++t) {
      HyperParams hp{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}, t};
      GValue g3 = nGn(hp, *c3);
      GValue g5 = nGn(hp, *c5);
      CHECK(g5.precision_used == g3.precision_used + 2);
      CHECK(g5.value.truncate(g3.precision_used).str() == g3.value.str());
    }
  }
}

TEST_CASE("invariance under integer shifts and permutations") {
  auto ctx = Context::create(11, 3);
  HyperParams a{{Rational(1, 4), Rational(2, 3)}, {Rational(1, 6), Rational(0)}, 5};
  HyperParams b{{Rational(2, 3) - Rational(2), Rational(5, 4)}, {Rational(0), Rational(7, 6)}, 5};
  CHECK(nGn(a, *ctx).value.identical(nGn(b, *ctx).value));
}

TEST_CASE("parameter validation") {
  auto ctx = Context::create(7, 3);
  HyperParams mismatch{{Rational(1, 2)}, {}, 1};
  CHECK_THROWS_AS(nGn(mismatch, *ctx), Error);
  HyperParams bad_den{{Rational(1, 7)}, {Rational(0)}, 1};
  try {
    nGn(bad_den, *ctx);
    FAIL("expected kDomain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
}

TEST_CASE("named 2G2 families") {
  uint32_t p = 13;
  auto r = g22_r_params(3, 2, p);
  REQUIRE(r.top.size() == 2);
  CHECK(r.top[0] == Rational(3, 12));
  CHECK(r.top[1] == Rational(-1, 2) - Rational(3, 12));
  CHECK(r.bot[0] == Rational(-3, 24));
  CHECK(r.bot[1] == Rational(-3, 24) - Rational(1, 2));
  CHECK(r.t == 2);
  auto s = g22_s_params(2, 3, p);
  CHECK(s.top[0] == Rational(0));
  CHECK(s.bot[1] == Rational(-4, 12));
  // t <- (6t)^{-1}: 6*3 = 18 = 5 mod 13, 5^{-1} = 8
  CHECK(s.t == 8);
  auto ctx = Context::create(p, 3);
  try {
    g22_s(1, 0, *ctx);
    FAIL("expected kDomain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
}
