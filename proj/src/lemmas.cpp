#include <algorithm>
#include <climits>
#include <functional>

#include "padic_hyper/error.hpp"
#include "padic_hyper/modarith.hpp"
#include "padic_hyper/verify.hpp"

namespace phyper {
namespace {

// Accumulates the cases of one exhaustive lemma check into a Verdict.
class CaseLog {
 public:
  CaseLog(std::string id, const Context& ctx) : id_(std::move(id)), ctx_(ctx) {}

  void scalar(const std::string& label, const PadicNum& l, const PadicNum& r, int min_precision) {
    int A = std::min(l.precision(), r.precision());
    if (A == PadicNum::kExact) A = ctx_.precision();
    bool ok = A >= min_precision && equals_at(l, r, A);
    record(label, ok, A, l.truncate(A).str(), r.truncate(A).str());
  }

  void residue(const std::string& label, uint64_t l, uint64_t r) {
    const PadicContext& pc = ctx_.padic();
    scalar(label, PadicNum::from_residue(l, pc.N, 0, pc), PadicNum::from_residue(r, pc.N, 0, pc), pc.N);
  }

  void integer(const std::string& label, int64_t l, int64_t r) {
    exact_ = true;
    record(label, l == r, INT_MAX, std::to_string(l), std::to_string(r));
  }

  void ring(const std::string& label, const EisensteinElem& l, const EisensteinElem& r, int pi_precision) {
    ring_ = true;
    record(label, l.equals_at(r, pi_precision), pi_precision, l.str(), r.str());
  }

  void verdict(const std::string& label, const Verdict& v) {
    ring_ = true;
    record(label, v.equal, v.precision, v.lhs, v.rhs);
  }

  Verdict finish() const {
    Verdict v;
    v.identity = id_;
    v.p = ctx_.p();
    v.params["N"] = std::to_string(ctx_.precision());
    v.params["cases"] = std::to_string(cases_);
    v.params["failed_cases"] = std::to_string(failed_);
    if (ring_) v.params["precision_unit"] = "pi";
    if (exact_) v.params["arithmetic"] = "exact-integer";
    if (failed_ > 0) v.params["first_failure"] = first_;
    v.lhs = lhs_;
    v.rhs = rhs_;
    v.precision = precision_ == INT_MAX ? 0 : precision_;
    v.equal = cases_ > 0 && failed_ == 0;
    return v;
  }

 private:
  void record(const std::string& label, bool ok, int precision, std::string l, std::string r) {
    ++cases_;
    precision_ = std::min(precision_, precision);
    if (ok) {
      if (failed_ == 0) {
        lhs_ = std::move(l);
        rhs_ = std::move(r);
      }
      return;
    }
    if (failed_++ == 0) {
      first_ = label;
      lhs_ = std::move(l);
      rhs_ = std::move(r);
    }
  }

  std::string id_;
  const Context& ctx_;
  int64_t cases_ = 0;
  int64_t failed_ = 0;
  int precision_ = INT_MAX;
  bool ring_ = false;
  bool exact_ = false;
  std::string first_, lhs_, rhs_;
};

std::string kv(const char* k, int64_t v) { return std::string(k) + "=" + std::to_string(v); }
std::string kv2(const char* a, int64_t x, const char* b, int64_t y) { return kv(a, x) + "," + kv(b, y); }

uint64_t gam(const Context& ctx, const Rational& x) { return ctx.gamma().gamma_residue(x); }
uint64_t gamf(const Context& ctx, const Rational& x) { return gam(ctx, x.frac()); }

Verdict orthogonality(const Context& ctx) {
  CaseLog log("lemma-2.1-orthogonality", ctx);
  const CharacterTable& chars = ctx.chars();
  const uint32_t p = ctx.p();
  const uint64_t m = ctx.padic().modulus();
  for (uint32_t e = 0; e + 1 < p; ++e) {
    uint64_t s = 0;
    for (uint32_t x = 0; x < p; ++x) s = add_mod(s, chars.value_residue(CharExp{e}, x), m);
    log.residue(kv("chi", e), s, e == 0 ? p - 1 : 0);
  }
  for (uint32_t x = 0; x < p; ++x) {
    uint64_t s = 0;
    for (uint32_t e = 0; e + 1 < p; ++e) s = add_mod(s, chars.value_residue(CharExp{e}, x), m);
    log.residue(kv("x", x), s, x == 1 ? p - 1 : 0);
  }
  return log.finish();
}

Verdict binomial_1(const Context& ctx) {
  CaseLog log("eq-1-binomial", ctx);
  const CharacterTable& c = ctx.chars();
  const uint32_t p = ctx.p();
  for (uint32_t a = 0; a + 1 < p; ++a)
    for (uint32_t b = 0; b + 1 < p; ++b) {
      CharExp A{a}, B{b};
      log.scalar(kv2("A", a, "B", b), c.greene_binomial(A, B), c.greene_binomial(A, c.mul(A, c.conj(B))),
                 ctx.precision() - 1);
    }
  return log.finish();
}

Verdict binomial_2(const Context& ctx) {
  CaseLog log("eq-2-binomial", ctx);
  const CharacterTable& c = ctx.chars();
  const uint32_t p = ctx.p();
  for (uint32_t a = 0; a + 1 < p; ++a)
    for (uint32_t b = 0; b + 1 < p; ++b) {
      CharExp A{a}, B{b};
      PadicNum rhs = c.greene_binomial(c.conj(B), c.conj(A)) * c.value(c.mul(A, B), -1);
      log.scalar(kv2("A", a, "B", b), c.greene_binomial(A, B), rhs, ctx.precision() - 1);
    }
  return log.finish();
}

Verdict reflection(const Context& ctx) {
  CaseLog log("prod-1-reflection", ctx);
  const int64_t p = ctx.p();
  const uint64_t m = ctx.padic().modulus();
  std::vector<Rational> grid;
  for (int64_t k = 0; k <= p - 1; ++k) grid.emplace_back(k, p - 1);
  for (int64_t k = 0; k <= 2 * (p - 1); ++k) grid.emplace_back(k, 2 * (p - 1));
  for (int64_t k = 0; k <= 12; ++k) grid.emplace_back(k, 12);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (const Rational& x : grid) {
    uint64_t lhs = mul_mod(gam(ctx, x), gam(ctx, Rational(1) - x), m);
    log.residue("x=" + x.str(), lhs, reduce(reflection_sign(x, p), m));
  }
  return log.finish();
}

Verdict multiplication(const Context& ctx) {
  CaseLog log("prod-2-multiplication", ctx);
  const int64_t p = ctx.p();
  const uint64_t mod = ctx.padic().modulus();
  const CharacterTable& chars = ctx.chars();
  for (int64_t m : {2, 3, 4, 6}) {
    if (m % p == 0) continue;
    for (int64_t r = 0; r <= p - 1; ++r) {
      Rational x(r, p - 1);
      uint64_t lhs = 1;
      for (int64_t h = 0; h < m; ++h) lhs = mul_mod(lhs, gam(ctx, (x + Rational(h)) / Rational(m)), mod);
      // omega(m^{(1-x)(1-p)}) = omega(m)^{r + 1 - p} = omega(m)^r
      uint64_t rhs = mul_mod(chars.value_residue(chars.chi(r), m), gam(ctx, x), mod);
      for (int64_t h = 1; h < m; ++h) rhs = mul_mod(rhs, gam(ctx, Rational(h, m)), mod);
      log.residue(kv2("m", m, "r", r), lhs, rhs);
    }
  }
  return log.finish();
}

Verdict mccarthy_product(const Context& ctx) {
  CaseLog log("prod-3-mccarthy", ctx);
  const int64_t p = ctx.p();
  const uint64_t mod = ctx.padic().modulus();
  const CharacterTable& chars = ctx.chars();
  for (int64_t t : {2, 3, 4, 6}) {
    if (t % p == 0) continue;
    for (int64_t j = 0; j <= p - 2; ++j) {
      uint64_t lhs = mul_mod(gamf(ctx, Rational(t * j, p - 1)), chars.value_residue(chars.chi(t * j), t), mod);
      for (int64_t h = 1; h < t; ++h) lhs = mul_mod(lhs, gam(ctx, Rational(h, t)), mod);
      uint64_t rhs = 1;
      for (int64_t h = 0; h < t; ++h) rhs = mul_mod(rhs, gamf(ctx, Rational(h, t) + Rational(j, p - 1)), mod);
      log.residue(kv2("t", t, "j", j), lhs, rhs);
    }
  }
  return log.finish();
}

Verdict floor_2_6(const Context& ctx) {
  CaseLog log("lemma-2.6-floor", ctx);
  const int64_t q = ctx.p() - 1;
  const Rational half(1, 2);
  for (int64_t r = 0; r < q; ++r)
    for (int64_t s = 0; s < q; ++s) {
      Rational u = Rational(r, 2 * q) + Rational(s, q);
      log.integer(kv2("r", r, "s", s), Rational(2 * s + r, q).floor(), u.floor() + (u + half).floor());
    }
  return log.finish();
}

Verdict floor_2_7(const Context& ctx) {
  CaseLog log("lemma-2.7-floor", ctx);
  const int64_t q = ctx.p() - 1;
  const Rational half(1, 2);
  for (int64_t r = 0; r < q; ++r)
    for (int64_t s = 0; s < q; ++s) {
      int64_t lhs = (-half - Rational(r, q) - Rational(s, q)).floor();
      int64_t inner = ((-half - Rational(r, q)).frac() - Rational(s, q)).floor();
      int64_t rhs = (2 * r <= q ? -1 : -2) + inner;
      log.integer(kv2("r", r, "s", s), lhs, rhs);
    }
  return log.finish();
}

Verdict floor_2_8(const Context& ctx) {
  CaseLog log("lemma-2.8-floor", ctx);
  const int64_t q = ctx.p() - 1;
  const Rational half(1, 2);
  for (int64_t r = 1; r < q; ++r)
    for (int64_t s = 0; s < q; ++s) {
      int64_t lhs = (-half - Rational(r, q)).floor() - (Rational(-r - s, q) - half).floor();
      int64_t rhs = -((-half - Rational(r, q)).frac() - Rational(s, q)).floor();
      log.integer(kv2("r", r, "s", s), lhs, rhs);
    }
  return log.finish();
}

struct Lemma29Sides {
  PadicNum lhs;     // the three-gamma product (a unit)
  PadicNum scalar;  // p phi(-1) Gamma(1/2) (-p)^f omega^r(-2) binom
  int f = 0;        // floor(-1/2 - r/(p-1))
  PadicNum binom;
};

Lemma29Sides lemma29_sides(const Context& ctx, int64_t r) {
  const int64_t p = ctx.p();
  const CharacterTable& c = ctx.chars();
  const Rational half(1, 2);
  Rational h(r, 2 * (p - 1)), x(r, p - 1);
  Lemma29Sides s;
  s.lhs = ctx.gamma_at(h.frac()) * ctx.gamma_at((h + half).frac()) * ctx.gamma_at((-x - half).frac());
  s.f = static_cast<int>((-half - x).floor());
  s.binom = c.greene_binomial(c.chi(-r), c.chi(-r + (p - 1) / 2));
  s.scalar = ctx.integer(p * legendre(-1, p)) * ctx.gamma_at(half) * ctx.integer(-p).pow(s.f) *
             c.value(c.chi(r), -2) * s.binom;
  return s;
}

Verdict lemma_2_9_squared(const Context& ctx) {
  CaseLog log("lemma-2.9-squared", ctx);
  const int64_t p = ctx.p();
  const CharacterTable& c = ctx.chars();
  for (int64_t r = 0; r <= p - 2; ++r) {
    Lemma29Sides s = lemma29_sides(ctx, r);
    // g(phi)^2 = p phi(-1) clears the half-integer power of -p.
    PadicNum g12 = ctx.gamma_at(Rational(1, 2));
    PadicNum rhs = ctx.integer(p * p * p * legendre(-1, p)) * g12 * g12 * ctx.integer(-p).pow(1 + 2 * s.f) *
                   c.value(c.chi(r), 4) * s.binom * s.binom;
    log.scalar(kv("r", r), s.lhs * s.lhs, rhs, ctx.precision() - 2);
  }
  return log.finish();
}

Verdict lemma_2_9_ring(const Context& ctx, const EisensteinField& field) {
  CaseLog log("lemma-2.9-ring", ctx);
  const int64_t p = ctx.p();
  const PadicContext& pc = ctx.padic();
  const CharacterTable& c = ctx.chars();
  // (-p)^{1/2} is realized as pi^{(p-1)/2}; both sides are scaled by p^2
  // to stay in the ring of integers.
  EisensteinElem half_power =
      field.gauss_sum(c.quadratic()) * EisensteinElem::pi_power(static_cast<uint64_t>(p - 1) / 2, pc);
  PadicNum p2 = ctx.integer(p * p);
  for (int64_t r = 0; r <= p - 2; ++r) {
    Lemma29Sides s = lemma29_sides(ctx, r);
    PadicNum l = s.lhs * p2, rs = s.scalar * p2;
    int A = std::min({l.precision(), rs.precision(), pc.N});
    EisensteinElem lhs = EisensteinElem::scalar(l.truncate(A));
    EisensteinElem rhs = EisensteinElem::scalar(rs.truncate(A)) * half_power;
    log.ring(kv("r", r), lhs, rhs, static_cast<int>(p - 1) * A);
  }
  return log.finish();
}

Verdict lemma_2_10(const Context& ctx) {
  CaseLog log("lemma-2.10", ctx);
  const int64_t p = ctx.p();
  const Rational half(1, 2);
  PadicNum g12 = ctx.gamma_at(half);
  PadicNum denom = g12 * g12;
  PadicNum sum = PadicNum::exact_zero(ctx.padic());
  for (int64_t s = 0; s <= p - 2; ++s) {
    Rational q(s, p - 1);
    int64_t e = -(-q).floor() - q.floor() - (q + half).floor() - (-half - q).floor();
    PadicNum term = ctx.integer(-p).pow(e) * ctx.gamma_at((-q).frac()) * ctx.gamma_at(q.frac()) *
                    ctx.gamma_at((q + half).frac()) * ctx.gamma_at((-q - half).frac()) / denom;
    sum = sum + term;
  }
  log.scalar("s-sum", sum, ctx.integer(-p * (p - 1) * (p - 2)), ctx.precision() - 2);
  return log.finish();
}

Verdict lemma_2_11(const Context& ctx) {
  CaseLog log("lemma-2.11", ctx);
  const int64_t p = ctx.p();
  const uint64_t m = ctx.padic().modulus();
  const CharacterTable& c = ctx.chars();
  const Rational half(1, 2);
  for (int64_t s = 1; s <= p - 2; ++s) {
    if (s == (p - 1) / 2) continue;
    Rational q(s, p - 1);
    uint64_t lhs = mul_mod(mul_mod(gamf(ctx, -q - half), gamf(ctx, -q), m), gamf(ctx, Rational(2 * s, p - 1)), m);
    uint64_t rhs = neg_mod(mul_mod(gam(ctx, half), c.value_residue(c.chi(-s), 4), m), m);
    log.residue(kv("s", s), lhs, rhs);
  }
  return log.finish();
}

Verdict fuselier(const Context& ctx, const EisensteinField& f) {
  CaseLog log("lemma-2.2-fuselier", ctx);
  for (int64_t a = 1; a < ctx.p(); ++a) log.verdict(kv("alpha", a), fuselier_check(f, a));
  return log.finish();
}

Verdict gauss_inverse(const Context& ctx, const EisensteinField& f) {
  CaseLog log("eq-2.3-gauss-inverse", ctx);
  for (uint32_t e = 1; e + 1 < ctx.p(); ++e) log.verdict(kv("chi", e), gauss_inverse_check(f, CharExp{e}));
  return log.finish();
}

Verdict hasse_davenport(const Context& ctx, const EisensteinField& f) {
  CaseLog log("thm-2.4-hasse-davenport", ctx);
  const uint32_t q = ctx.p() - 1;
  const CharacterTable& c = ctx.chars();
  for (uint32_t m = 1; m <= q; ++m) {
    if (q % m != 0) continue;
    for (uint32_t e = 0; e < q; ++e) {
      if (c.order(CharExp{e}) != m) continue;
      for (uint32_t psi = 0; psi < q; ++psi)
        log.verdict("m=" + std::to_string(m) + ",chi=" + std::to_string(e) + ",psi=" + std::to_string(psi),
                    hasse_davenport_check(f, CharExp{e}, m, CharExp{psi}));
    }
  }
  return log.finish();
}

Verdict gauss_jacobi(const Context& ctx, const EisensteinField& f) {
  CaseLog log("lemma-2.5-gauss-jacobi", ctx);
  const uint32_t q = ctx.p() - 1;
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b) {
      if ((a + b) % q == 0) continue;
      log.verdict(kv2("A", a, "B", b), gauss_jacobi_check(f, CharExp{a}, CharExp{b}));
    }
  return log.finish();
}

Verdict gross_koblitz(const Context& ctx, const EisensteinField& f) {
  CaseLog log("thm-2.7-gross-koblitz", ctx);
  for (int64_t j = 0; j + 1 < ctx.p(); ++j) log.verdict(kv("j", j), gross_koblitz_check(f, j));
  return log.finish();
}

using ScalarLemma = Verdict (*)(const Context&);
using RingLemma = Verdict (*)(const Context&, const EisensteinField&);

struct LemmaEntry {
  const char* id;
  ScalarLemma scalar;
  RingLemma ring;
};

const std::vector<LemmaEntry>& lemma_table() {
  static const std::vector<LemmaEntry> table = {
      {"lemma-2.1-orthogonality", orthogonality, nullptr},
      {"eq-1-binomial", binomial_1, nullptr},
      {"eq-2-binomial", binomial_2, nullptr},
      {"lemma-2.2-fuselier", nullptr, fuselier},
      {"eq-2.3-gauss-inverse", nullptr, gauss_inverse},
      {"thm-2.4-hasse-davenport", nullptr, hasse_davenport},
      {"lemma-2.5-gauss-jacobi", nullptr, gauss_jacobi},
      {"prod-1-reflection", reflection, nullptr},
      {"prod-2-multiplication", multiplication, nullptr},
      {"prod-3-mccarthy", mccarthy_product, nullptr},
      {"thm-2.7-gross-koblitz", nullptr, gross_koblitz},
      {"lemma-2.6-floor", floor_2_6, nullptr},
      {"lemma-2.7-floor", floor_2_7, nullptr},
      {"lemma-2.8-floor", floor_2_8, nullptr},
      {"lemma-2.9-squared", lemma_2_9_squared, nullptr},
      {"lemma-2.9-ring", nullptr, lemma_2_9_ring},
      {"lemma-2.10", lemma_2_10, nullptr},
      {"lemma-2.11", lemma_2_11, nullptr},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : lemma_table()) v.emplace_back(e.id);
    return v;
  }();
  return ids;
}

bool lemma_needs_field(const std::string& id) {
  for (const auto& e : lemma_table())
    if (id == e.id) return e.ring != nullptr;
  return false;
}

Verdict verify_lemma(const std::string& id, const Context& ctx, const EisensteinField* field) {
  for (const auto& e : lemma_table()) {
    if (id != e.id) continue;
    if (e.scalar) return e.scalar(ctx);
    if (!field)
      return make_skip(id, ctx.p(), {{"N", std::to_string(ctx.precision())}}, "p-above-eisenstein-cap");
    return e.ring(ctx, *field);
  }
  fail(ErrorCode::kInvalidArgument, "unknown lemma id '" + id + "'");
}

std::vector<Verdict> verify_lemmas(const Context& ctx, const EisensteinField* field) {
  std::vector<Verdict> out;
  for (const auto& id : lemma_ids()) out.push_back(verify_lemma(id, ctx, field));
  return out;
}

}  // namespace phyper
