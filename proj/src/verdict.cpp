#include "padic_hyper/verdict.hpp"

#include <algorithm>

namespace phyper {

void compare_scalars(Verdict& v, const PadicNum& lhs, const PadicNum& rhs, int min_precision) {
  int A = std::min(lhs.precision(), rhs.precision());
  if (A == PadicNum::kExact) A = lhs.ctx().N;
  v.precision = A;
  v.lhs = lhs.truncate(A).str();
  v.rhs = rhs.truncate(A).str();
  v.lhs_value = lhs;
  v.rhs_value = rhs;
  if (A < min_precision) {
    v.equal = false;
    v.params["precision_shortfall"] = std::to_string(min_precision);
    return;
  }
  v.equal = equals_at(lhs, rhs, A);
}

Verdict make_skip(std::string identity, uint32_t p, std::map<std::string, std::string> params, std::string reason) {
  Verdict v;
  v.identity = std::move(identity);
  v.p = p;
  v.params = std::move(params);
  v.skip = std::move(reason);
  return v;
}

}  // namespace phyper
