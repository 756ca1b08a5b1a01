#pragma once

// The totally ramified extension Z_p[pi]/(pi^{p-1} + p), truncated to
// coefficients mod p^N (pi-adic precision (p-1)N). Hosts zeta_p and the
// Gauss sums g(chi) = sum_x chi(x) zeta_p^x.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "padic_hyper/context.hpp"
#include "padic_hyper/verdict.hpp"

namespace phyper {

inline constexpr uint32_t kDefaultEisensteinCap = 50;

class EisensteinElem {
 public:
  EisensteinElem() = default;

  static EisensteinElem zero(const PadicContext& ctx);
  static EisensteinElem one(const PadicContext& ctx);
  static EisensteinElem scalar(uint64_t residue, const PadicContext& ctx);
  static EisensteinElem scalar_int(int64_t value, const PadicContext& ctx);
  /// Embeds a p-integral PadicNum; throws kDomain for negative valuation.
  static EisensteinElem scalar(const PadicNum& x);
  /// pi^k for k >= 0, folded through pi^{p-1} = -p.
  static EisensteinElem pi_power(uint64_t k, const PadicContext& ctx);

  const PadicContext& ctx() const { return ctx_; }
  uint64_t coefficient(size_t i) const { return c_[i]; }
  size_t degree_bound() const { return c_.size(); }

  EisensteinElem operator-() const;
  friend EisensteinElem operator+(const EisensteinElem& a, const EisensteinElem& b);
  friend EisensteinElem operator-(const EisensteinElem& a, const EisensteinElem& b);
  friend EisensteinElem operator*(const EisensteinElem& a, const EisensteinElem& b);
  EisensteinElem scaled(uint64_t residue) const;
  EisensteinElem pow(uint64_t e) const;
  /// Inverse of a unit (c_0 prime to p); throws kDomain otherwise.
  EisensteinElem inverse() const;

  bool is_zero() const;
  /// pi-adic valuation; (p-1)N for zero.
  int valuation() const;
  /// Full pi-adic precision carried by the ring, (p-1)N.
  int precision() const { return static_cast<int>(ctx_.p - 1) * ctx_.N; }
  bool equals_at(const EisensteinElem& o, int pi_precision) const;

  std::string str() const;
  friend bool operator==(const EisensteinElem&, const EisensteinElem&) = default;

 private:
  PadicContext ctx_{};
  std::vector<uint64_t> c_;
};

/// The primitive p-th root of unity with zeta_p ≡ 1 + pi (mod pi^2).
EisensteinElem zeta_p(const PadicContext& ctx);

/// zeta_p, its powers and all Gauss sums for one context.
class EisensteinField {
 public:
  /// Throws kBudget when p exceeds cap.
  explicit EisensteinField(std::shared_ptr<const Context> ctx, uint32_t cap = kDefaultEisensteinCap);

  const Context& context() const { return *ctx_; }
  const PadicContext& padic() const { return ctx_->padic(); }
  int precision() const { return zeta_.precision(); }

  const EisensteinElem& zeta() const { return zeta_; }
  /// zeta^k for any integer k.
  const EisensteinElem& zeta_power(int64_t k) const;
  const EisensteinElem& gauss_sum(CharExp chi) const;
  EisensteinElem scalar(const PadicNum& x) const { return EisensteinElem::scalar(x); }

 private:
  std::shared_ptr<const Context> ctx_;
  EisensteinElem zeta_;
  std::vector<EisensteinElem> zeta_powers_;  // k in [0, p)
  std::vector<EisensteinElem> gauss_;        // indexed by character exponent
};

/// g(omega-bar^j) = -pi^j Gamma_p(j/(p-1)), 0 <= j < p-1.
Verdict gross_koblitz_check(const EisensteinField& field, int64_t j);
/// prod_{i<m} g(chi^i psi) = g(psi^m) psi^{-m}(m) prod_{0<i<m} g(chi^i),
/// m the order of chi.
Verdict hasse_davenport_check(const EisensteinField& field, CharExp chi, CharExp psi);
/// As above, insisting that chi has exact order m (m | p-1).
Verdict hasse_davenport_check(const EisensteinField& field, CharExp chi, uint32_t m, CharExp psi);
/// zeta^alpha = (p-1)^{-1} sum_m g(omega-bar^m) omega^m(alpha), alpha != 0.
Verdict fuselier_check(const EisensteinField& field, int64_t alpha);
/// g(chi) g(chi-bar) = p chi(-1), chi nontrivial.
Verdict gauss_inverse_check(const EisensteinField& field, CharExp chi);
/// g(A) g(B) = J(A, B) g(AB), AB nontrivial.
Verdict gauss_jacobi_check(const EisensteinField& field, CharExp a, CharExp b);

}  // namespace phyper
