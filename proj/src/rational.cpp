#include "padic_hyper/rational.hpp"

#include <charconv>
#include <numeric>

#include "padic_hyper/error.hpp"

namespace phyper {
namespace {

int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < -INT64_MAX) fail(ErrorCode::kInvalidArgument, "rational overflow");
  return static_cast<int64_t>(v);
}

Rational make(__int128 num, __int128 den) {
  if (den == 0) fail(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

int64_t parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    fail(ErrorCode::kInvalidArgument, "cannot parse integer '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) fail(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    if (num == INT64_MIN || den == INT64_MIN) fail(ErrorCode::kInvalidArgument, "rational overflow");
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator-() const { return make(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) fail(ErrorCode::kDomain, "rational division by zero");
  return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int64_t Rational::floor() const {
  int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  int64_t den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) fail(ErrorCode::kInvalidArgument, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(trim(text.substr(0, slash))), den);
}

bool in_zp(const Rational& q, uint64_t p) { return q.den() % static_cast<int64_t>(p) != 0; }

}  // namespace phyper
