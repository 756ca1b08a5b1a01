#include "padic_hyper/eisenstein.hpp"

#include <algorithm>
#include <sstream>

#include "padic_hyper/error.hpp"
#include "padic_hyper/modarith.hpp"

namespace phyper {
namespace {

void same_ring(const PadicContext& a, const PadicContext& b) {
  if (!(a == b)) fail(ErrorCode::kInvalidArgument, "Eisenstein context mismatch");
}

int ceil_log2(uint64_t n) {
  int k = 0;
  while ((uint64_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

EisensteinElem EisensteinElem::zero(const PadicContext& ctx) {
  EisensteinElem e;
  e.ctx_ = ctx;
  e.c_.assign(ctx.p - 1, 0);
  return e;
}

EisensteinElem EisensteinElem::scalar(uint64_t residue, const PadicContext& ctx) {
  EisensteinElem e = zero(ctx);
  e.c_[0] = residue % ctx.modulus();
  return e;
}

EisensteinElem EisensteinElem::one(const PadicContext& ctx) { return scalar(1, ctx); }

EisensteinElem EisensteinElem::scalar_int(int64_t value, const PadicContext& ctx) {
  return scalar(reduce(value, ctx.modulus()), ctx);
}

EisensteinElem EisensteinElem::scalar(const PadicNum& x) {
  const PadicContext& ctx = x.ctx();
  if (x.is_zero()) return zero(ctx);
  if (x.valuation() < 0) fail(ErrorCode::kDomain, "scalar " + x.str() + " is not p-integral");
  return scalar(*x.residue(std::min(ctx.N, x.precision())), ctx);
}

EisensteinElem EisensteinElem::pi_power(uint64_t k, const PadicContext& ctx) {
  EisensteinElem e = zero(ctx);
  uint64_t q = k / (ctx.p - 1);
  if (q >= static_cast<uint64_t>(ctx.N)) return e;
  uint64_t m = ctx.modulus();
  uint64_t c = ctx.power(static_cast<int>(q));
  if (q & 1) c = neg_mod(c, m);
  e.c_[k % (ctx.p - 1)] = c;
  return e;
}

EisensteinElem EisensteinElem::operator-() const {
  EisensteinElem r = *this;
  uint64_t m = ctx_.modulus();
  for (auto& c : r.c_) c = neg_mod(c, m);
  return r;
}

EisensteinElem operator+(const EisensteinElem& a, const EisensteinElem& b) {
  same_ring(a.ctx_, b.ctx_);
  EisensteinElem r = a;
  uint64_t m = a.ctx_.modulus();
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = add_mod(r.c_[i], b.c_[i], m);
  return r;
}

EisensteinElem operator-(const EisensteinElem& a, const EisensteinElem& b) { return a + (-b); }

EisensteinElem operator*(const EisensteinElem& a, const EisensteinElem& b) {
  same_ring(a.ctx_, b.ctx_);
  const size_t d = a.c_.size();
  uint64_t m = a.ctx_.modulus();
  std::vector<uint64_t> full(2 * d, 0);
  for (size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) full[i + j] = add_mod(full[i + j], mul_mod(a.c_[i], b.c_[j], m), m);
  }
  EisensteinElem r = EisensteinElem::zero(a.ctx_);
  uint64_t p = a.ctx_.p % m;
  for (size_t i = 0; i < d; ++i) r.c_[i] = sub_mod(full[i], mul_mod(full[i + d], p, m), m);
  return r;
}

EisensteinElem EisensteinElem::scaled(uint64_t residue) const {
  EisensteinElem r = *this;
  uint64_t m = ctx_.modulus();
  residue %= m;
  for (auto& c : r.c_) c = mul_mod(c, residue, m);
  return r;
}

EisensteinElem EisensteinElem::pow(uint64_t e) const {
  EisensteinElem result = one(ctx_);
  EisensteinElem base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

EisensteinElem EisensteinElem::inverse() const {
  uint64_t m = ctx_.modulus();
  auto c0 = inv_mod(c_[0], m);
  if (!c0) fail(ErrorCode::kDomain, "inverse of a non-unit in the Eisenstein ring");
  EisensteinElem y = scalar(*c0, ctx_);
  EisensteinElem two = scalar(2, ctx_);
  EisensteinElem unit = one(ctx_);
  int budget = ceil_log2(static_cast<uint64_t>(precision())) + 4;
  for (int i = 0; i < budget; ++i) {
    EisensteinElem xy = *this * y;
    if (xy == unit) return y;
    y = y * (two - xy);
  }
  if (*this * y == unit) return y;
  fail(ErrorCode::kInternal, "Eisenstein inverse did not converge");
}

bool EisensteinElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint64_t c) { return c == 0; });
}

int EisensteinElem::valuation() const {
  int best = precision();
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    best = std::min(best, static_cast<int>(ctx_.p - 1) * valuation_of(c_[i], ctx_.p) + static_cast<int>(i));
  }
  return best;
}

bool EisensteinElem::equals_at(const EisensteinElem& o, int pi_precision) const {
  if (pi_precision > precision())
    fail(ErrorCode::kPrecision, "pi-adic precision " + std::to_string(pi_precision) + " exceeds ring precision " +
                                    std::to_string(precision()));
  return (*this - o).valuation() >= pi_precision;
}

std::string EisensteinElem::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (any) os << " + ";
    os << c_[i];
    if (i == 1) os << "*pi";
    if (i > 1) os << "*pi^" << i;
    any = true;
  }
  if (!any) os << "0";
  os << " (mod pi^" << precision() << ")";
  return os.str();
}

EisensteinElem zeta_p(const PadicContext& ctx) {
  ctx.validate();
  const uint32_t p = ctx.p;
  const uint64_t m = ctx.modulus();
  // h(w) = w - w^p + sum_{k=2}^{p-1} (C(p,k)/p) pi^{k-1} w^k, so that
  // zeta = 1 + pi w satisfies zeta^p = 1 iff h(w) = 0. h'(w) is a unit.
  std::vector<uint64_t> binom(p, 0);  // C(p,k)/p = C(p-1,k-1)/k
  uint64_t c = 1;                      // C(p-1, k-1)
  for (uint32_t k = 1; k < p; ++k) {
    if (k > 1) c = mul_mod(mul_mod(c, p - (k - 1), m), *inv_mod(k - 1, m), m);
    binom[k] = mul_mod(c, *inv_mod(k, m), m);
  }
  std::vector<EisensteinElem> coef(p, EisensteinElem::zero(ctx));
  for (uint32_t k = 2; k < p; ++k) coef[k] = EisensteinElem::pi_power(k - 1, ctx).scaled(binom[k]);

  auto eval = [&](const EisensteinElem& w, EisensteinElem& h, EisensteinElem& dh) {
    EisensteinElem pw = w;  // w^k
    EisensteinElem pwm1 = EisensteinElem::one(ctx);  // w^{k-1}
    h = w;
    dh = EisensteinElem::one(ctx);
    for (uint32_t k = 2; k <= p; ++k) {
      pwm1 = pw;
      pw = pw * w;
      if (k < p) {
        h = h + coef[k] * pw;
        dh = dh + (coef[k] * pwm1).scaled(k);
      } else {
        h = h - pw;
        dh = dh - pwm1.scaled(p);
      }
    }
  };

  EisensteinElem w = EisensteinElem::one(ctx);
  int budget = 2 * ceil_log2(static_cast<uint64_t>(p - 1) * ctx.N) + 4;
  bool converged = false;
  for (int i = 0; i < budget; ++i) {
    EisensteinElem h, dh;
    eval(w, h, dh);
    if (h.is_zero()) {
      converged = true;
      break;
    }
    w = w - h * dh.inverse();
  }
  if (!converged) fail(ErrorCode::kInternal, "zeta_p Newton iteration did not converge");
  EisensteinElem zeta = EisensteinElem::one(ctx) + EisensteinElem::pi_power(1, ctx) * w;
  EisensteinElem unit = EisensteinElem::one(ctx);
  if (!(zeta.pow(p) == unit) || zeta == unit) fail(ErrorCode::kInternal, "zeta_p failed its defining check");
  return zeta;
}

EisensteinField::EisensteinField(std::shared_ptr<const Context> ctx, uint32_t cap) : ctx_(std::move(ctx)) {
  const uint32_t p = ctx_->p();
  if (p > cap)
    fail(ErrorCode::kBudget,
         "p = " + std::to_string(p) + " is above the Eisenstein cap " + std::to_string(cap));
  const PadicContext& pc = ctx_->padic();
  zeta_ = zeta_p(pc);
  zeta_powers_.reserve(p);
  zeta_powers_.push_back(EisensteinElem::one(pc));
  for (uint32_t k = 1; k < p; ++k) zeta_powers_.push_back(zeta_powers_.back() * zeta_);
  const CharacterTable& chars = ctx_->chars();
  gauss_.reserve(p - 1);
  for (uint32_t mexp = 0; mexp + 1 < p; ++mexp) {
    EisensteinElem g = EisensteinElem::zero(pc);
    for (uint32_t x = 1; x < p; ++x) g = g + zeta_powers_[x].scaled(chars.value_residue(CharExp{mexp}, x));
    gauss_.push_back(std::move(g));
  }
}

const EisensteinElem& EisensteinField::zeta_power(int64_t k) const { return zeta_powers_[reduce(k, ctx_->p())]; }

const EisensteinElem& EisensteinField::gauss_sum(CharExp chi) const { return gauss_[chi.m % (ctx_->p() - 1)]; }

namespace {

Verdict ring_verdict(std::string id, const EisensteinField& f, std::map<std::string, std::string> params,
                     const EisensteinElem& lhs, const EisensteinElem& rhs) {
  Verdict v;
  v.identity = std::move(id);
  v.p = f.context().p();
  v.params = std::move(params);
  v.params["N"] = std::to_string(f.context().precision());
  v.lhs = lhs.str();
  v.rhs = rhs.str();
  v.precision = f.precision();
  v.equal = lhs.equals_at(rhs, v.precision);
  return v;
}

}  // namespace

Verdict gross_koblitz_check(const EisensteinField& field, int64_t j) {
  const Context& ctx = field.context();
  const uint32_t p = ctx.p();
  if (j < 0 || j >= static_cast<int64_t>(p - 1))
    fail(ErrorCode::kInvalidArgument, "Gross-Koblitz index j must lie in [0, p-1)");
  const EisensteinElem& lhs = field.gauss_sum(ctx.chars().chi(-j));
  EisensteinElem rhs = -(EisensteinElem::pi_power(static_cast<uint64_t>(j), ctx.padic()) *
                         EisensteinElem::scalar(ctx.gamma_at(Rational(j, p - 1))));
  return ring_verdict("thm-2.7-gross-koblitz", field, {{"j", std::to_string(j)}}, lhs, rhs);
}

Verdict hasse_davenport_check(const EisensteinField& field, CharExp chi, CharExp psi) {
  return hasse_davenport_check(field, chi, field.context().chars().order(chi), psi);
}

Verdict hasse_davenport_check(const EisensteinField& field, CharExp chi, uint32_t m, CharExp psi) {
  const Context& ctx = field.context();
  const CharacterTable& chars = ctx.chars();
  if (m == 0 || (ctx.p() - 1) % m != 0 || chars.order(chi) != m)
    fail(ErrorCode::kInvalidArgument, "chi = omega^" + std::to_string(chi.m) + " does not have exact order " +
                                          std::to_string(m) + " dividing p-1");
  const PadicContext& pc = ctx.padic();
  EisensteinElem lhs = EisensteinElem::one(pc);
  for (uint32_t i = 0; i < m; ++i) lhs = lhs * field.gauss_sum(chars.mul(chars.pow(chi, i), psi));
  EisensteinElem rhs = field.gauss_sum(chars.pow(psi, m))
                           .scaled(chars.value_residue(chars.pow(psi, -static_cast<int64_t>(m)), m));
  for (uint32_t i = 1; i < m; ++i) rhs = rhs * field.gauss_sum(chars.pow(chi, i));
  return ring_verdict("thm-2.4-hasse-davenport", field,
                      {{"chi", std::to_string(chi.m)}, {"m", std::to_string(m)}, {"psi", std::to_string(psi.m)}},
                      lhs, rhs);
}

Verdict fuselier_check(const EisensteinField& field, int64_t alpha) {
  const Context& ctx = field.context();
  const uint32_t p = ctx.p();
  if (reduce(alpha, p) == 0) fail(ErrorCode::kInvalidArgument, "fuselier_check needs alpha != 0");
  const CharacterTable& chars = ctx.chars();
  const PadicContext& pc = ctx.padic();
  uint64_t mod = pc.modulus();
  EisensteinElem sum = EisensteinElem::zero(pc);
  for (uint32_t mexp = 0; mexp + 1 < p; ++mexp)
    sum = sum + field.gauss_sum(chars.chi(-static_cast<int64_t>(mexp))).scaled(chars.value_residue(CharExp{mexp}, alpha));
  sum = sum.scaled(*inv_mod(p - 1, mod));
  return ring_verdict("lemma-2.2-fuselier", field, {{"alpha", std::to_string(reduce(alpha, p))}},
                      field.zeta_power(alpha), sum);
}

Verdict gauss_inverse_check(const EisensteinField& field, CharExp chi) {
  const Context& ctx = field.context();
  const CharacterTable& chars = ctx.chars();
  if (chi == chars.trivial()) fail(ErrorCode::kInvalidArgument, "gauss_inverse_check needs a nontrivial character");
  EisensteinElem lhs = field.gauss_sum(chi) * field.gauss_sum(chars.conj(chi));
  EisensteinElem rhs = EisensteinElem::scalar_int(ctx.p(), ctx.padic()).scaled(chars.value_residue(chi, -1));
  return ring_verdict("eq-2.3-gauss-inverse", field, {{"chi", std::to_string(chi.m)}}, lhs, rhs);
}

Verdict gauss_jacobi_check(const EisensteinField& field, CharExp a, CharExp b) {
  const Context& ctx = field.context();
  const CharacterTable& chars = ctx.chars();
  if (chars.mul(a, b) == chars.trivial()) fail(ErrorCode::kInvalidArgument, "gauss_jacobi_check needs AB nontrivial");
  EisensteinElem lhs = field.gauss_sum(a) * field.gauss_sum(b);
  EisensteinElem rhs = field.gauss_sum(chars.mul(a, b)).scaled(chars.jacobi_residue(a, b));
  return ring_verdict("lemma-2.5-gauss-jacobi", field, {{"A", std::to_string(a.m)}, {"B", std::to_string(b.m)}},
                      lhs, rhs);
}

}  // namespace phyper
