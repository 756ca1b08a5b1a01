#pragma once

// McCarthy's nGn function:
//
//   nGn[a; b | t] = -1/(p-1) sum_{j=0}^{p-2} (-1)^{jn} omega-bar^j(t)
//     prod_i (-p)^{-floor(<a_i> - j/(p-1)) - floor(<-b_i> + j/(p-1))}
//       Gamma_p(<a_i - j/(p-1)>) / Gamma_p(<a_i>)
//       Gamma_p(<-b_i + j/(p-1)>) / Gamma_p(<-b_i>)

#include <cstdint>
#include <vector>

#include "padic_hyper/context.hpp"
#include "padic_hyper/rational.hpp"

namespace phyper {

struct HyperParams {
  std::vector<FpRational> top;  // a_i
  std::vector<FpRational> bot;  // b_i
  int64_t t = 0;                // argument in F_p
};

struct GValue {
  PadicNum value;
  /// Most negative (-p)-exponent over all terms (0 when t = 0).
  int min_term_valuation = 0;
  /// Absolute precision of value.
  int precision_used = 0;
};

/// Throws kInvalidArgument for malformed arrays, kDomain for parameters
/// outside Z_p, kPrecision when the (-p)-powers consume all significance.
GValue nGn(const HyperParams& params, const Context& ctx);

/// One summand of the defining sum (before the -1/(p-1) factor), for any
/// integer j. It depends only on j mod p - 1.
PadicNum nGn_term(const HyperParams& params, int64_t j, const Context& ctx);

/// 2G2[r/(p-1), -1/2 - r/(p-1); -r/(2(p-1)), -r/(2(p-1)) - 1/2 | t].
HyperParams g22_r_params(int64_t r, int64_t t, uint32_t p);
GValue g22_r(int64_t r, int64_t t, const Context& ctx);

/// 2G2[0, -1/2 - s/(p-1); s/(p-1), -2s/(p-1) | 1/(6t)]. Throws kDomain when 6t ≡ 0.
HyperParams g22_s_params(int64_t s, int64_t t, uint32_t p);
GValue g22_s(int64_t s, int64_t t, const Context& ctx);

}  // namespace phyper
