#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace phyper {

/// Exact rational with a positive denominator, always in lowest terms.
/// Overflow of the 64-bit numerator or denominator throws.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t num, int64_t den = 1);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Greatest integer <= value (rounds toward -infinity).
  int64_t floor() const;
  /// value - floor(), in [0, 1).
  Rational frac() const;

  bool is_integer() const { return den_ == 1; }
  std::string str() const;

  /// Parses "a", "-a", "a/b".
  static Rational parse(std::string_view text);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

/// Elements of Q ∩ Z_p are plain rationals whose denominator is prime to p.
/// The type alias documents intent at call sites; p-coprimality is checked
/// where p is known.
using FpRational = Rational;

bool in_zp(const Rational& q, uint64_t p);

}  // namespace phyper
