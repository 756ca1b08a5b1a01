#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "padic_hyper/padics.hpp"

namespace phyper {

/// Outcome of one identity check. `equal` is meaningful only when `skip`
/// is empty; a skipped case always carries a machine-readable reason code.
struct Verdict {
  std::string identity;
  uint32_t p = 0;
  std::map<std::string, std::string> params;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  int precision = 0;
  std::optional<std::string> skip;

  // Scalar sides, when the identity lives in Q_p.
  std::optional<PadicNum> lhs_value;
  std::optional<PadicNum> rhs_value;

  bool skipped() const { return skip.has_value(); }
  bool failed() const { return !skip && !equal; }
};

/// Compare two Q_p values at their common absolute precision, which must
/// reach `min_precision`; fills lhs/rhs/equal/precision of `v`.
void compare_scalars(Verdict& v, const PadicNum& lhs, const PadicNum& rhs, int min_precision);

Verdict make_skip(std::string identity, uint32_t p, std::map<std::string, std::string> params,
                  std::string reason);

}  // namespace phyper
