#pragma once

// Point counts over F_p for the curve families, the birational maps that
// connect them, and McCarthy's trace formula for y^2 = x^3 + ax + b.

#include <cstdint>
#include <string>
#include <vector>

#include "padic_hyper/context.hpp"

namespace phyper {

enum class Family { kDIK, kJacobiQuartic, kHessian, kShortWeierstrass, kWeierstrassA2 };

const char* family_name(Family f);

struct CurveSpec {
  Family family = Family::kDIK;
  /// lambda (DIK, Jacobi), d (Hessian), a4 a6 (short Weierstrass) or
  /// a2 a4 a6 (WeierstrassA2), all reduced mod p.
  std::vector<int64_t> params;
  uint32_t p = 0;
};

struct CountResult {
  int64_t total = 0;  // projective, including points at infinity
  int64_t trace = 0;  // p + 1 - total
  int64_t infinity_points = 0;
  std::string convention;

  int64_t affine() const { return total - infinity_points; }
};

/// y^2 = x^3 + a2 x^2 + a4 x + a6. Throws kDomain when singular.
CountResult count_weierstrass(int64_t a2, int64_t a4, int64_t a6, uint32_t p);
/// y^2 = x^3 + 3 lambda (x + 1)^2; lambda ∉ {0, 9/4}.
CountResult count_dik(int64_t lambda, uint32_t p);
/// v^2 = u^4 + 2 lambda u^2 + 1, with `infinity_convention` points added.
CountResult count_jacobi(int64_t lambda, uint32_t p, int infinity_convention);
/// x^3 + y^3 + 1 = 3dxy in P^2.
CountResult count_hessian(int64_t d, uint32_t p);
/// Dispatch on spec.family; `infinity_convention` applies to Jacobi only.
CountResult count(const CurveSpec& spec, int infinity_convention = 1);

int64_t jacobi_affine_count(int64_t lambda, uint32_t p);

bool dik_nonsingular(int64_t lambda, uint32_t p);
bool jacobi_nonsingular(int64_t lambda, uint32_t p);
bool hessian_nonsingular(int64_t d, uint32_t p);
int64_t cubic_discriminant(int64_t a2, int64_t a4, int64_t a6, uint32_t p);
/// j(E^DIK) = 4 lambda 1728 (lambda - 2)^3 / (4 lambda - 9), mod p.
int64_t dik_j_invariant(int64_t lambda, uint32_t p);

struct HessianToDik {
  int64_t lambda = 0;  // (d+2)^3 / (3k)
  int64_t k = 0;       // 4/3 (d^2 + d + 1)
  int64_t t = 0;       // (d^2 + d + 1) / (3(d + 2))
  bool admissible = false;  // t is a nonzero square
};

/// Throws kDomain for d ∈ {-2, 0} or d^3 = 1.
HessianToDik hessian_to_dik(int64_t d, uint32_t p);

/// gamma = 5 - 6 phi(-3) if p ≡ 1 (mod 3), else 1.
int hessian_gamma(uint32_t p);
/// N_0 = 2 if p ≡ ±1 (mod 12), else 0.
int hessian_n0(uint32_t p);

/// phi(b) p 2G2[1/4, 3/4; 1/3, 2/3 | -27 b^2 / (4 a^3)].
PadicNum mccarthy_trace(int64_t a, int64_t b, const Context& ctx);

// Small F_p helpers shared by the verifiers.
int64_t fp(int64_t a, uint32_t p);
int64_t fp_inv(int64_t a, uint32_t p);  // throws kDomain for 0
int64_t fp_div(int64_t a, int64_t b, uint32_t p);
bool fp_is_square(int64_t a, uint32_t p);  // nonzero squares only

}  // namespace phyper
