#pragma once

// Morita's p-adic gamma function on Q ∩ Z_p, via a table of partial
// products over [0, p^N), plus exact floor / fractional-part helpers.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "padic_hyper/padics.hpp"
#include "padic_hyper/rational.hpp"

namespace phyper {

inline constexpr uint64_t kDefaultGammaBudget = 100'000'000;

/// table[k] = prod_{0<j<k, p∤j} j mod p^N, for 0 <= k < p^N.
class GammaTable {
 public:
  GammaTable() = default;

  static GammaTable build(const PadicContext& ctx, uint64_t max_entries = kDefaultGammaBudget);

  /// Load from cache_dir if a valid file is present, otherwise build and
  /// write it. Cache write failures are not fatal.
  static GammaTable load_or_build(const PadicContext& ctx, const std::filesystem::path& cache_dir,
                                  uint64_t max_entries = kDefaultGammaBudget);

  static std::filesystem::path cache_file(const std::filesystem::path& dir, const PadicContext& ctx);

  /// Cache format: "PGAM1\n", "<p> <N>\n", then p^N little-endian residues
  /// of fixed width (minimal bytes to hold p^N - 1).
  void write(std::ostream& out) const;
  static std::optional<GammaTable> read(std::istream& in, const PadicContext& ctx);

  static int residue_width(const PadicContext& ctx);

  const PadicContext& ctx() const { return ctx_; }
  uint64_t size() const { return table_.size(); }
  uint64_t operator[](uint64_t k) const { return table_[k]; }

  /// Gamma_p(k) mod p^N for an integer 0 <= k < p^N.
  uint64_t gamma_int(uint64_t k) const;
  /// Gamma_p(x) mod p^N; x must lie in Z_p.
  uint64_t gamma_residue(const FpRational& x) const;
  PadicNum gamma_at(const FpRational& x) const;

  friend bool operator==(const GammaTable&, const GammaTable&) = default;

 private:
  PadicContext ctx_{};
  std::vector<uint32_t> table_;
};

struct FracState {
  Rational value;
  Rational frac;  // <x>, in [0, 1)
  int64_t floor = 0;
};

FracState frac_floor(const Rational& x);

/// (-1)^{x_0} where x_0 ≡ x (mod p) and x_0 ∈ {1, ..., p}.
int reflection_sign(const FpRational& x, uint32_t p);

}  // namespace phyper
