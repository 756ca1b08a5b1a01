#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "padic_hyper/rational.hpp"

namespace phyper {

/// Prime and working precision. Units are stored modulo p^N.
struct PadicContext {
  uint32_t p = 0;
  int N = 0;

  /// Throws kInvalidArgument unless p is an odd prime, N >= 1 and p^N < 2^62.
  void validate() const;
  uint64_t modulus() const;  // p^N
  uint64_t power(int k) const;  // p^k for 0 <= k <= N

  friend bool operator==(const PadicContext&, const PadicContext&) = default;
};

/// An element of Q_p known to finite absolute precision.
///
/// A nonzero value is p^v * u with u a unit known modulo p^r (1 <= r <= N),
/// so the value is known modulo p^(v + r). Zero is either exact or known
/// only modulo p^A ("inexact zero", produced by cancellation).
class PadicNum {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  PadicNum() = default;

  static PadicNum exact_zero(const PadicContext& ctx);
  static PadicNum zero_mod(const PadicContext& ctx, int abs_precision);
  /// Exact integer, stored with relative precision N.
  static PadicNum from_int(int64_t value, const PadicContext& ctx);
  /// p^shift * x where x in Z_p is known modulo p^digits and residue is
  /// x mod p^digits. digits is capped at N after normalization.
  static PadicNum from_residue(uint64_t residue, int digits, int shift, const PadicContext& ctx);

  const PadicContext& ctx() const { return ctx_; }
  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && prec_ == kExact; }
  /// v_p(value); for a zero, the absolute precision (a lower bound).
  int valuation() const { return zero_ ? prec_ : val_; }
  /// Unit part, in [0, p^relative_precision()). Zero for zeros.
  uint64_t unit() const { return unit_; }
  /// Absolute precision: the value is known modulo p^precision().
  int precision() const { return prec_; }
  int relative_precision() const { return zero_ ? 0 : prec_ - val_; }

  PadicNum operator-() const;
  friend PadicNum operator+(const PadicNum& a, const PadicNum& b);
  friend PadicNum operator-(const PadicNum& a, const PadicNum& b);
  friend PadicNum operator*(const PadicNum& a, const PadicNum& b);
  friend PadicNum operator/(const PadicNum& a, const PadicNum& b);
  PadicNum& operator+=(const PadicNum& o) { return *this = *this + o; }
  PadicNum& operator*=(const PadicNum& o) { return *this = *this * o; }

  PadicNum inverse() const;
  PadicNum pow(int64_t e) const;

  /// Same value reduced to absolute precision min(A, precision()).
  PadicNum truncate(int abs_precision) const;

  /// Residue modulo p^digits when the value lies in Z_p and
  /// digits <= precision(). nullopt otherwise.
  std::optional<uint64_t> residue(int digits) const;

  /// "p^v * u (mod p^r)"; zeros render as "0" or "0 (mod p^A)".
  std::string str() const;

  /// Representation equality (value, valuation and precision all match).
  bool identical(const PadicNum& o) const;

 private:
  PadicContext ctx_{};
  bool zero_ = true;
  int val_ = 0;
  int prec_ = kExact;
  uint64_t unit_ = 0;
};

/// v_p(x - y) >= A. Throws kPrecision if A exceeds either operand's precision.
bool equals_at(const PadicNum& x, const PadicNum& y, int abs_precision);

/// q in Q ∩ Z_p; throws kDomain when p divides the denominator.
PadicNum embed_rational(const FpRational& q, const PadicContext& ctx);

/// Any rational, allowing p in the denominator (negative valuation).
PadicNum embed_qp(const Rational& q, const PadicContext& ctx);

/// Teichmüller lift of a mod p by Frobenius iteration x -> x^p.
PadicNum teichmuller(int64_t a, const PadicContext& ctx);
uint64_t teichmuller_residue(int64_t a, const PadicContext& ctx);

}  // namespace phyper
