#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fibermovie {

/// Exact rational number with a positive, reduced denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Largest integer not exceeding the value.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  static Rational parse(const std::string& text);

 private:
  static Rational from_wide(__int128 num, __int128 den);
  void assign(std::int64_t num, std::int64_t den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// A point of the circle R/Z, stored as an exact rational in [0,1).
class Angle {
 public:
  Angle() = default;
  Angle(Rational value) : value_(wrap(value)) {}
  Angle(std::int64_t num, std::int64_t den) : Angle(Rational(num, den)) {}

  const Rational& value() const { return value_; }

  friend bool operator==(const Angle&, const Angle&) = default;
  friend auto operator<=>(const Angle& a, const Angle& b) { return a.value_ <=> b.value_; }

  Angle operator+(const Rational& d) const { return Angle(value_ + d); }
  Angle operator-(const Rational& d) const { return Angle(value_ - d); }

  /// Length of the counterclockwise arc from `from` to `to`, in [0,1).
  static Rational forward_distance(const Angle& from, const Angle& to) {
    return wrap(to.value_ - from.value_);
  }
  /// Midpoint of the counterclockwise arc from `from` to `to`; the full circle when they coincide.
  static Angle forward_midpoint(const Angle& from, const Angle& to) {
    Rational d = forward_distance(from, to);
    if (d == Rational(0)) d = Rational(1);
    return from + d * Rational(1, 2);
  }

  std::string str() const { return value_.str(); }

 private:
  static Rational wrap(const Rational& r) { return r - Rational(r.floor()); }
  Rational value_;
};

inline std::ostream& operator<<(std::ostream& os, const Angle& a) { return os << a.str(); }

/// Open counterclockwise arc (lo, hi) of the circle. lo == hi denotes the circle minus one point.
struct ArcInterval {
  Angle lo;
  Angle hi;

  bool contains(const Angle& a) const {
    if (a == lo) return false;
    if (lo == hi) return true;
    return Angle::forward_distance(lo, a) < Angle::forward_distance(lo, hi);
  }
  Rational length() const {
    Rational d = Angle::forward_distance(lo, hi);
    return d == Rational(0) ? Rational(1) : d;
  }
  friend bool operator==(const ArcInterval&, const ArcInterval&) = default;
};

inline Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr __int128 kMax = INT64_MAX;
  if (num > kMax || num < -kMax || den > kMax) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

inline void Rational::assign(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

inline Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  if (slash == std::string::npos) {
    const long long n = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad rational: " + text);
    return Rational(n);
  }
  const std::string a = text.substr(0, slash);
  const std::string b = text.substr(slash + 1);
  const long long n = std::stoll(a, &used);
  if (used != a.size()) throw std::invalid_argument("bad rational: " + text);
  const long long d = std::stoll(b, &used);
  if (used != b.size() || d == 0) throw std::invalid_argument("bad rational: " + text);
  return Rational(n, d);
}

}  // namespace fibermovie
