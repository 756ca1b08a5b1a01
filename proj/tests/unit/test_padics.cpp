#include "doctest.h"
#include "oracle.hpp"
#include "padic_hyper/error.hpp"
#include "padic_hyper/modarith.hpp"
#include "padic_hyper/padics.hpp"
#include "padic_hyper/rational.hpp"

using namespace phyper;

namespace {
PadicContext C(uint32_t p, int N) { return PadicContext{p, N}; }
}  // namespace

TEST_CASE("modarith basics") {
  CHECK(pow_mod(3, 4, 7) == 4);
  CHECK(inv_mod(2, 125).value() == 63);
  CHECK_FALSE(inv_mod(5, 125).has_value());
  CHECK(is_prime(47));
  CHECK_FALSE(is_prime(49));
  CHECK(valuation_of(250, 5) == 3);
  for (uint64_t p : {5, 7, 11, 13, 47, 97}) {
    uint64_t g = primitive_root(p);
    std::vector<bool> seen(p, false);
    uint64_t x = 1;
    for (uint64_t k = 0; k + 1 < p; ++k, x = x * g % p) seen[x] = true;
    for (uint64_t a = 1; a < p; ++a) CHECK(seen[a]);
  }
  CHECK_THROWS_AS(checked_pow(10, 30), Error);
}

TEST_CASE("rational parse and floor") {
  CHECK(Rational::parse(" 3/4 ") == Rational(3, 4));
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
  CHECK(Rational(-1, 3).floor() == -1);
  CHECK(Rational(-1, 3).frac() == Rational(2, 3));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(in_zp(Rational(1, 3), 5));
  CHECK_FALSE(in_zp(Rational(1, 5), 5));
}

TEST_CASE("context validation") {
  CHECK_NOTHROW(C(5, 3).validate());
  CHECK_THROWS_AS(C(4, 3).validate(), Error);
  CHECK_THROWS_AS(C(2, 3).validate(), Error);
  CHECK_THROWS_AS(C(5, 0).validate(), Error);
  CHECK_THROWS_AS(C(47, 40).validate(), Error);
  CHECK(C(5, 3).modulus() == 125);
}

TEST_CASE("embedding rationals: known residues") {
  auto half125 = embed_rational(Rational(1, 2), C(5, 3));
  CHECK(half125.residue(3).value() == 63);
  CHECK(half125.str() == "5^0 * 63 (mod 5^3)");
  auto half49 = embed_rational(Rational(1, 2), C(7, 2));
  CHECK(half49.residue(2).value() == 25);
  // 10/3 = 5 * (2/3); integers carry relative precision N, so the unit is
  // 2/3 mod 125.
  auto x = embed_qp(Rational(10, 3), C(5, 3));
  CHECK(x.valuation() == 1);
  CHECK(x.unit() == oracle::mulm(2, oracle::invm(3, 125), 125));
  CHECK(x.relative_precision() == 3);
  CHECK_THROWS_AS(embed_rational(Rational(1, 5), C(5, 3)), Error);
  // 1/5 does live in Q_5.
  auto y = embed_qp(Rational(1, 5), C(5, 3));
  CHECK(y.valuation() == -1);
}

TEST_CASE("field arithmetic agrees with integers mod p^N") {
  for (uint32_t p : {5u, 7u, 11u}) {
    PadicContext c = C(p, 3);
    int64_t m = oracle::ipow(p, 3);
    for (int64_t a = -20; a <= 20; a += 3)
      for (int64_t b = -17; b <= 17; b += 4) {
        auto A = PadicNum::from_int(a, c), B = PadicNum::from_int(b, c);
        CHECK((A + B).residue(3).value() == static_cast<uint64_t>(oracle::mod(a + b, m)));
        CHECK((A - B).residue(3).value() == static_cast<uint64_t>(oracle::mod(a - b, m)));
        CHECK((A * B).residue(3).value() == static_cast<uint64_t>(oracle::mod(a * b, m)));
        if (b % static_cast<int64_t>(p) != 0) {
          auto q = A / B;
          CHECK(q.residue(3).value() == static_cast<uint64_t>(oracle::mulm(oracle::mod(a, m), oracle::invm(b, m), m)));
        }
      }
  }
}

TEST_CASE("precision tracking") {
  PadicContext c = C(5, 4);
  auto five = PadicNum::from_int(5, c);
  CHECK(five.valuation() == 1);
  CHECK(five.precision() == 5);  // relative precision N
  auto inv = five.inverse();
  CHECK(inv.valuation() == -1);
  CHECK(inv.precision() == 3);
  // 1/5 + 1: precision limited by 1/5.
  auto s = inv + PadicNum::from_int(1, c);
  CHECK(s.precision() == 3);
  CHECK(s.valuation() == -1);
  // Cancellation: (1 + 25) - 1 = 25 keeps absolute precision 4.
  auto d = PadicNum::from_int(26, c) - PadicNum::from_int(1, c);
  CHECK(d.valuation() == 2);
  CHECK(d.precision() == 4);
  // Full cancellation is an inexact zero.
  auto z = PadicNum::from_int(7, c) - PadicNum::from_int(7, c);
  CHECK(z.is_zero());
  CHECK_FALSE(z.is_exact_zero());
  CHECK(z.precision() == 4);
  CHECK(z.str() == "0 (mod 5^4)");
  CHECK(PadicNum::exact_zero(c).str() == "0");
  CHECK(PadicNum::from_int(0, c).is_exact_zero());
}

TEST_CASE("zero handling") {
  PadicContext c = C(7, 3);
  auto x = PadicNum::from_int(3, c);
  CHECK((x * PadicNum::exact_zero(c)).is_exact_zero());
  auto z = PadicNum::zero_mod(c, 2);
  auto prod = x * z;
  CHECK(prod.is_zero());
  CHECK(prod.precision() == 2);
  try {
    (void)PadicNum::exact_zero(c).inverse();
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
  try {
    (void)z.inverse();
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecision);
  }
}

TEST_CASE("truncate and equals_at") {
  PadicContext c = C(5, 4);
  auto a = PadicNum::from_int(1 + 5 * 5 * 5, c);
  auto b = PadicNum::from_int(1, c);
  CHECK(equals_at(a, b, 3));
  CHECK_FALSE(equals_at(a, b, 4));
  CHECK(a.truncate(3).identical(b.truncate(3)));
  CHECK(a.truncate(3).str() == "5^0 * 1 (mod 5^3)");
  CHECK_FALSE(a.identical(b));
}

TEST_CASE("pow") {
  PadicContext c = C(7, 3);
  auto x = PadicNum::from_int(3, c);
  CHECK(x.pow(6).residue(3).value() == static_cast<uint64_t>(oracle::powm(3, 6, 343)));
  CHECK((x.pow(-2) * x.pow(2)).residue(3).value() == 1);
  CHECK(x.pow(0).residue(3).value() == 1);
}

TEST_CASE("teichmuller lift") {
  // omega(2) mod 25 at p = 5 is 7 (7^4 = 2401 = 1 mod 25, 7 = 2 mod 5).
  CHECK(teichmuller_residue(2, C(5, 2)) == 7);
  for (uint32_t p : {5u, 7u, 11u, 13u, 31u}) {
    PadicContext c = C(p, 3);
    int64_t m = oracle::ipow(p, 3);
    for (int64_t a = 1; a < p; ++a) {
      uint64_t w = teichmuller_residue(a, c);
      CHECK(static_cast<int64_t>(w) == oracle::omega(a, p, 3));
      CHECK(w % p == static_cast<uint64_t>(a));
      CHECK(oracle::powm(static_cast<int64_t>(w), p - 1, m) == 1);
    }
    CHECK(teichmuller(0, c).is_exact_zero());
  }
}
