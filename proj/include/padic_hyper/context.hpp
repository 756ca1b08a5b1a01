#pragma once

#include <filesystem>
#include <memory>
#include <optional>

#include "padic_hyper/characters.hpp"
#include "padic_hyper/padics.hpp"
#include "padic_hyper/pgamma.hpp"

namespace phyper {

struct ContextOptions {
  /// Gamma-table cache directory; nullopt disables the cache.
  std::optional<std::filesystem::path> cache_dir;
  uint64_t gamma_budget = kDefaultGammaBudget;
};

/// Everything precomputed for one (p, N): the gamma table and the
/// character table. Immutable after construction.
class Context {
 public:
  explicit Context(PadicContext ctx, const ContextOptions& options = {});

  static std::shared_ptr<const Context> create(uint32_t p, int N, const ContextOptions& options = {});

  const PadicContext& padic() const { return ctx_; }
  uint32_t p() const { return ctx_.p; }
  int precision() const { return ctx_.N; }
  const GammaTable& gamma() const { return gamma_; }
  const CharacterTable& chars() const { return chars_; }

  PadicNum gamma_at(const FpRational& x) const { return gamma_.gamma_at(x); }
  PadicNum integer(int64_t v) const { return PadicNum::from_int(v, ctx_); }
  PadicNum rational(const Rational& q) const { return embed_qp(q, ctx_); }
  PadicNum phi(int64_t a) const { return integer(legendre(a, ctx_.p)); }

 private:
  PadicContext ctx_;
  GammaTable gamma_;
  CharacterTable chars_;
};

}  // namespace phyper
