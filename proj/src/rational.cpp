#include "spectral/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace spectral {

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = negative ? BigInt(-v) : v;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = den < 0 ? Raw(BigInt(-num), BigInt(-den)) : Raw(num, den);
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  BigInt num;
  BigInt den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(s, num)
                      : parse_integer(trim(s.substr(0, slash)), num) &&
                            parse_integer(trim(s.substr(slash + 1)), den);
  if (!ok) throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt Rational::floor() const {
  const BigInt n = numerator();
  const BigInt d = denominator();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  BigInt f = floor();
  return is_integer() ? f : BigInt(f + 1);
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::mod(const Rational& m) const {
  if (m.sign() <= 0) throw std::domain_error("modulus must be positive");
  const Rational q = *this / m;
  return *this - m * Rational(q.floor());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

double Rational::to_double() const { return static_cast<double>(to_long_double()); }

long double Rational::to_long_double() const {
  // Split off the integer part so large numerators do not lose the fraction.
  const BigInt whole = floor();
  const Rational rest = *this - Rational(whole);
  const BigInt n = rest.numerator();
  const BigInt d = rest.denominator();
  long double frac_part;
  if (d < BigInt(1) << 60) {
    frac_part = static_cast<long double>(n.convert_to<long double>()) / d.convert_to<long double>();
  } else {
    // Scale into 64 bits before converting.
    const unsigned shift = static_cast<unsigned>(msb(d)) - 60;
    frac_part = static_cast<long double>(BigInt(n >> shift).convert_to<long double>()) /
                BigInt(d >> shift).convert_to<long double>();
  }
  return whole.convert_to<long double>() + frac_part;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(to_string());
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

}  // namespace spectral
