#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace spectral {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : value_(n) {}  // NOLINT: implicit from integers is intended
  Rational(const BigInt& n) : value_(n) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  BigInt floor() const;
  BigInt ceil() const;
  // Fractional part in [0, 1).
  Rational frac() const;
  // Representative of *this modulo m in [0, m); m must be positive.
  Rational mod(const Rational& m) const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;
  long double to_long_double() const;
  std::string to_string() const;

  Rational operator-() const { return Rational(Raw{}, -value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const;

 private:
  using Raw = boost::multiprecision::cpp_rational;
  Rational(Raw, Raw v) : value_(std::move(v)) {}
  Raw value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Narrowing conversion that throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt& v);

}  // namespace spectral

template <>
struct std::hash<spectral::Rational> {
  std::size_t operator()(const spectral::Rational& r) const noexcept { return r.hash(); }
};
