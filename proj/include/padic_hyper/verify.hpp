#pragma once

// Verifiers for the identities thm-1.1 ... thm-1.8, the cross-redundancy checks and
// the supporting lemmas, plus the sweep driver.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padic_hyper/context.hpp"
#include "padic_hyper/eisenstein.hpp"
#include "padic_hyper/verdict.hpp"

namespace phyper {

// Theorem verifiers. Excluded parameters come back as skips with a reason
// code (lambda-zero, lambda-9/4, d-minus-2, t-not-square, ...).
Verdict verify_thm_1_1(const Context& ctx, int64_t lambda);
Verdict verify_thm_1_2(const Context& ctx, int64_t lambda);
Verdict verify_thm_1_3(const Context& ctx, int64_t lambda);
Verdict verify_thm_1_4(const Context& ctx, int64_t lambda);
/// Three-way check: enumerated trace (with `infinity` points at infinity)
/// against both G-expressions. params["euler_equal"] records whether the
/// two G-expressions agree, which does not depend on `infinity`.
Verdict verify_thm_1_5(const Context& ctx, int64_t lambda, int infinity);
Verdict verify_thm_1_6(const Context& ctx, int64_t lambda);
Verdict verify_thm_1_7(const Context& ctx, int64_t d);
Verdict verify_thm_1_8(const Context& ctx, int64_t d);

/// p phi(-3(2l^2-6l+3)) G[1/4,3/4; 1/3,2/3 | z] = phi(-3l) a_p(DIK), the
/// step that turns thm-1.1 into thm-1.3.
Verdict verify_xcheck_1_3_1_1(const Context& ctx, int64_t lambda);
/// RHS of thm-1.4 = phi(3l) * RHS of thm-1.2.
Verdict verify_xcheck_1_4_1_2(const Context& ctx, int64_t lambda);

/// Lemma identities, one Verdict per lemma, exhaustive over the lemma's
/// variables. Ring-valued lemmas need `field` (nullptr: skipped).
const std::vector<std::string>& lemma_ids();
Verdict verify_lemma(const std::string& id, const Context& ctx, const EisensteinField* field);
std::vector<Verdict> verify_lemmas(const Context& ctx, const EisensteinField* field);
bool lemma_needs_field(const std::string& id);

/// Theorem and cross-check ids, in report order.
const std::vector<std::string>& theorem_ids();
/// theorem_ids() followed by lemma_ids().
const std::vector<std::string>& identity_ids();
bool is_identity(const std::string& id);
/// Expands "all", "lemmas" and single ids; throws kInvalidArgument.
std::vector<std::string> expand_identity(const std::string& id);

struct SweepConfig {
  std::string identity = "all";
  uint32_t p_min = 5;
  uint32_t p_max = 47;
  int precision = 3;
  /// Explicit parameter list (lambda or d); empty means every value in F_p.
  std::vector<int64_t> params;
  /// Jacobi points at infinity; nullopt calibrates against thm-1.5.
  std::optional<int> infinity;
  ContextOptions context;
  unsigned jobs = 1;
  uint32_t eisenstein_cap = kDefaultEisensteinCap;

  /// Throws kInvalidArgument: p_min >= 5, p_max >= p_min, N >= 2, known id.
  void validate() const;
};

struct Tally {
  int64_t checked = 0;  // passed + failed
  int64_t passed = 0;
  int64_t failed = 0;
  int64_t skipped = 0;
  uint32_t p_lo = 0;  // smallest and largest prime seen
  uint32_t p_hi = 0;

  void add(const Verdict& v);
};

struct SweepReport {
  SweepConfig config;
  int infinity_convention = 1;
  bool infinity_calibrated = false;
  std::vector<Verdict> results;  // ordered by (p, identity, parameter)
  std::map<std::string, Tally> by_identity;
  Tally totals;

  std::vector<const Verdict*> failures() const;
};

/// Picks the Jacobi infinity convention I in {0, 1, 2} under which
/// thm-1.5 holds on every lambda for the primes in [p_min, p_max].
/// Ties and total failure fall back to the I with the fewest failures,
/// smallest first.
int calibrate_infinity(uint32_t p_min, uint32_t p_max, int precision, const ContextOptions& options);

SweepReport sweep(const SweepConfig& config);

/// Primes in [lo, hi].
std::vector<uint32_t> primes_between(uint32_t lo, uint32_t hi);

}  // namespace phyper
