#pragma once

#include "spectral/rational.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spectral {

// Largest root-of-unity order the exact engine will build. Larger orders
// throw std::overflow_error.
inline constexpr std::uint64_t kMaxCyclotomicOrder = std::uint64_t{1} << 20;
// sum_is_zero works on sparse terms and accepts much larger orders.
inline constexpr std::uint64_t kMaxSparseOrder = std::uint64_t{1} << 62;

// Dense integer polynomial, coefficients in ascending degree, trailing zeros trimmed.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

  struct DivMod;
  // Division by a monic polynomial.
  DivMod divmod(const IntegerPolynomial& monic) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct IntegerPolynomial::DivMod {
  IntegerPolynomial quotient;
  IntegerPolynomial remainder;
};

// Phi_N. Results are memoized behind a mutex.
const IntegerPolynomial& cyclotomic_polynomial(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// coefficient * e^{2 pi i exponent}, exponent kept in [0, 1).
struct RootOfUnityTerm {
  std::int64_t coefficient{1};
  Rational exponent;

  RootOfUnityTerm() = default;
  RootOfUnityTerm(std::int64_t c, const Rational& e) : coefficient(c), exponent(e.frac()) {}
};

// Least common multiple of the exponent denominators.
std::uint64_t common_order(std::span<const RootOfUnityTerm> terms);

// Element of Z[zeta_N] stored as sum_k c_k x^k modulo x^N - 1, x -> e^{2 pi i / N}.
class CyclotomicElement {
 public:
  CyclotomicElement() : CyclotomicElement(1) {}
  explicit CyclotomicElement(std::uint64_t order);
  // coeffs.size() must equal order.
  CyclotomicElement(std::uint64_t order, std::vector<BigInt> coeffs);

  static CyclotomicElement constant(std::uint64_t order, const BigInt& c);
  static CyclotomicElement root(std::uint64_t order, std::uint64_t k);
  // Terms accumulated in the given order, which every exponent denominator must divide.
  static CyclotomicElement from_terms(std::uint64_t order, std::span<const RootOfUnityTerm> terms);
  static CyclotomicElement from_terms(std::span<const RootOfUnityTerm> terms);

  std::uint64_t order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  // Remainder modulo Phi_N, length phi(N). Two elements are equal iff these agree.
  std::vector<BigInt> canonical() const;
  bool is_zero() const;

  // Same value, re-expressed in order m (a multiple of order()).
  CyclotomicElement lifted(std::uint64_t m) const;

  CyclotomicElement& operator+=(const CyclotomicElement& o);
  CyclotomicElement& operator-=(const CyclotomicElement& o);
  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(CyclotomicElement a, std::int64_t s);
  CyclotomicElement operator-() const;
  // Exact division by an integer; throws std::domain_error if the canonical
  // coefficients are not all divisible.
  friend CyclotomicElement operator/(const CyclotomicElement& a, std::int64_t s);
  // Complex conjugate (x^k -> x^{N-k}).
  CyclotomicElement conj() const;
  // Divides out the gcd of the canonical coefficients; returns that content.
  BigInt remove_content();

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

  std::complex<double> to_complex() const;

 private:
  std::uint64_t order_;
  std::vector<BigInt> coeffs_;
};

// Reduces e modulo Phi_N; the result has zero coefficients from degree phi(N) on.
CyclotomicElement normalize_element(const CyclotomicElement& e);

// Exact test of sum_j c_j e^{2 pi i exponent_j} == 0.
bool sum_is_zero(std::span<const RootOfUnityTerm> terms);

}  // namespace spectral
