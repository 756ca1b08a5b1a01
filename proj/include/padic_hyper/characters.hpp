#pragma once

#include <cstdint>
#include <vector>

#include "padic_hyper/padics.hpp"

namespace phyper {

/// The character omega^m of F_p^x, with m reduced modulo p - 1.
/// Every character, the trivial one included, vanishes at 0.
struct CharExp {
  uint32_t m = 0;
  friend bool operator==(const CharExp&, const CharExp&) = default;
};

/// Euler's criterion; returns -1, 0 or 1.
int legendre(int64_t a, uint32_t p);

/// Teichmüller values and multiplicative characters of F_p in Z_p / p^N.
/// Built once per context: one Frobenius lift for a generator, then a
/// discrete-log table so every character value is a single lookup.
class CharacterTable {
 public:
  CharacterTable() = default;
  explicit CharacterTable(const PadicContext& ctx);

  const PadicContext& ctx() const { return ctx_; }
  uint32_t p() const { return ctx_.p; }

  CharExp chi(int64_t m) const;
  CharExp trivial() const { return CharExp{0}; }
  CharExp quadratic() const { return CharExp{(ctx_.p - 1) / 2}; }
  CharExp conj(CharExp c) const { return chi(-static_cast<int64_t>(c.m)); }
  CharExp mul(CharExp a, CharExp b) const { return chi(static_cast<int64_t>(a.m) + b.m); }
  CharExp pow(CharExp a, int64_t k) const;
  /// Order of the character in the dual group.
  uint32_t order(CharExp c) const;

  uint64_t teichmuller_residue(int64_t a) const;
  uint64_t value_residue(CharExp c, int64_t a) const;
  PadicNum value(CharExp c, int64_t a) const;

  uint64_t jacobi_residue(CharExp a, CharExp b) const;
  /// J(A, B) = sum_x A(x) B(1 - x).
  PadicNum jacobi_sum(CharExp a, CharExp b) const;
  /// Greene's binomial B(-1)/p * J(A, conj B).
  PadicNum greene_binomial(CharExp a, CharExp b) const;

  uint32_t generator() const { return generator_; }
  uint32_t dlog(int64_t a) const;

 private:
  PadicContext ctx_{};
  uint32_t generator_ = 0;
  std::vector<uint32_t> dlog_;    // dlog_[a] for a in [1, p)
  std::vector<uint64_t> powers_;  // omega(g)^k mod p^N for k in [0, p-1)
};

}  // namespace phyper
