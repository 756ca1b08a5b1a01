#include "doctest.h"
#include "oracle.hpp"
#include "padic_hyper/curves.hpp"
#include "padic_hyper/error.hpp"
#include "padic_hyper/verify.hpp"

using namespace phyper;

TEST_CASE("theorem 1.1 holds pointwise") {
  for (uint32_t p : {5u, 7u, 11u, 13u}) {
    auto ctx = Context::create(p, 3);
    for (int64_t l = 1; l < p; ++l) {
      auto v = verify_thm_1_1(*ctx, l);
      if (v.skipped()) continue;
      CAPTURE(p);
      CAPTURE(l);
      CHECK(v.equal);
      CHECK(v.precision >= 1);
      CHECK(v.params.at("lambda") == std::to_string(l));
      CHECK(v.identity == "thm-1.1");
    }
  }
}

TEST_CASE("exclusions are skips with reason codes") {
  auto ctx = Context::create(7, 3);
  auto z = verify_thm_1_1(*ctx, 0);
  REQUIRE(z.skipped());
  CHECK(*z.skip == "lambda-zero");
  auto n = verify_thm_1_1(*ctx, 4);  // 9/4 mod 7
  REQUIRE(n.skipped());
  CHECK(*n.skip == "lambda-9/4");
  auto j = verify_thm_1_5(*ctx, 1, 1);
  REQUIRE(j.skipped());
  CHECK(*j.skip == "lambda-pm1");
  auto d = verify_thm_1_7(*ctx, 5);  // d = -2
  REQUIRE(d.skipped());
  CHECK(*d.skip == "d-minus-2");
  CHECK(*verify_thm_1_7(*ctx, 0).skip == "d-zero");
  CHECK(*verify_thm_1_7(*ctx, 2).skip == "d-cube-one");  // 8 = 1 mod 7
}

TEST_CASE("theorem 1.5: enumeration and both G-forms") {
  for (uint32_t p : {5u, 7u, 11u, 13u}) {
    auto ctx = Context::create(p, 3);
    for (int64_t l = 2; l + 1 < p; ++l) {
      auto v = verify_thm_1_5(*ctx, l, 1);
      if (v.skipped()) continue;
      CHECK(v.equal);
      CHECK(v.params.at("euler_equal") == "true");
      CHECK(v.params.at("infinity") == "1");
      // The trace side is an integer: p + 1 - #E.
      int64_t affine = oracle::affine_count({1, 0, 2 * l, 0, 1}, p);
      CHECK(equals_at(*v.lhs_value, ctx->integer(static_cast<int64_t>(p) + 1 - (affine + 1)), 3));
      // Wrong conventions fail.
      CHECK_FALSE(verify_thm_1_5(*ctx, l, 0).equal);
      CHECK_FALSE(verify_thm_1_5(*ctx, l, 2).equal);
    }
  }
}

TEST_CASE("cross-redundancy checks pass") {
  for (uint32_t p : {5u, 7u, 11u, 13u, 17u}) {
    auto ctx = Context::create(p, 3);
    for (int64_t l = 1; l < p; ++l) {
      auto a = verify_xcheck_1_3_1_1(*ctx, l);
      auto b = verify_xcheck_1_4_1_2(*ctx, l);
      if (!a.skipped()) CHECK(a.equal);
      if (!b.skipped()) CHECK(b.equal);
    }
  }
}

TEST_CASE("theorem 1.3 holds for p = 1 mod 4") {
  for (uint32_t p : {5u, 13u, 17u}) {
    auto ctx = Context::create(p, 3);
    for (int64_t l = 1; l < p; ++l) {
      auto v = verify_thm_1_3(*ctx, l);
      if (!v.skipped()) CHECK(v.equal);
    }
  }
}

TEST_CASE("theorem 1.7 holds for p = 1, 5 mod 12") {
  for (uint32_t p : {5u, 13u, 17u, 29u}) {
    auto ctx = Context::create(p, 3);
    for (int64_t d = 0; d < p; ++d) {
      auto v = verify_thm_1_7(*ctx, d);
      if (v.skipped()) continue;
      CAPTURE(p);
      CAPTURE(d);
      CHECK(v.equal);
      CHECK(v.params.at("N0") == std::to_string(hessian_n0(p)));
      CHECK(v.params.at("gamma") == std::to_string(hessian_gamma(p)));
    }
  }
}

TEST_CASE("lemmas pass at small primes") {
  for (uint32_t p : {5u, 7u, 11u}) {
    auto ctx = Context::create(p, 3);
    EisensteinField field(ctx);
    for (const auto& v : verify_lemmas(*ctx, &field)) {
      CAPTURE(v.identity);
      CHECK(v.equal);
      CHECK(v.params.at("failed_cases") == "0");
      CHECK(std::stoll(v.params.at("cases")) > 0);
    }
    for (const auto& id : lemma_ids())
      if (lemma_needs_field(id)) {
        auto v = verify_lemma(id, *ctx, nullptr);
        REQUIRE(v.skipped());
        CHECK(*v.skip == "p-above-eisenstein-cap");
      }
  }
}

TEST_CASE("identity registry") {
  CHECK(theorem_ids().front() == "thm-1.1");
  CHECK(identity_ids().size() == theorem_ids().size() + lemma_ids().size());
  CHECK(is_identity("lemma-2.9-ring"));
  CHECK_FALSE(is_identity("nope"));
  CHECK(expand_identity("lemmas") == lemma_ids());
  CHECK(expand_identity("thm-1.6") == std::vector<std::string>{"thm-1.6"});
  CHECK_THROWS_AS(expand_identity("nope"), Error);
  CHECK(primes_between(1, 20) == std::vector<uint32_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(primes_between(24, 28).empty());
}

TEST_CASE("sweep config validation") {
  SweepConfig c;
  CHECK_NOTHROW(c.validate());
  c.p_min = 3;
  CHECK_THROWS_AS(c.validate(), Error);
  c = SweepConfig{};
  c.precision = 1;
  CHECK_THROWS_AS(c.validate(), Error);
  c = SweepConfig{};
  c.p_max = 4;
  CHECK_THROWS_AS(c.validate(), Error);
  c = SweepConfig{};
  c.infinity = 3;
  CHECK_THROWS_AS(c.validate(), Error);
  c = SweepConfig{};
  c.identity = "thm-9.9";
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("precision refinement on single verdicts") {
  for (uint32_t p : {7u, 11u}) {
    auto c3 = Context::create(p, 3);
    auto c5 = Context::create(p, 5);
    for (int64_t l = 1; l < p; ++l) {
      auto a = verify_thm_1_1(*c3, l);
      auto b = verify_thm_1_1(*c5, l);
      CHECK(a.skip == b.skip);
      if (a.skipped()) continue;
      CHECK(a.equal == b.equal);
      CHECK(b.lhs_value->truncate(a.precision).str() == a.lhs);
      CHECK(b.rhs_value->truncate(a.precision).str() == a.rhs);
    }
  }
}
