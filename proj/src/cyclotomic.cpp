#include "spectral/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <tuple>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace spectral {

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntegerPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial::DivMod IntegerPolynomial::divmod(const IntegerPolynomial& monic) const {
  if (monic.is_zero() || monic.coeffs_.back() != 1)
    throw std::invalid_argument("divisor must be monic");
  const std::size_t dd = monic.coeffs_.size() - 1;
  std::vector<BigInt> rem = coeffs_;
  if (rem.size() <= dd) return {IntegerPolynomial{}, *this};
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    const BigInt c = rem[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * monic.coeffs_[j];
  }
  rem.resize(dd);
  return {IntegerPolynomial(std::move(quot)), IntegerPolynomial(std::move(rem))};
}

std::string IntegerPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint64_t, std::unique_ptr<const IntegerPolynomial>>& cache() {
  static std::map<std::uint64_t, std::unique_ptr<const IntegerPolynomial>> c;
  return c;
}

const IntegerPolynomial& cyclotomic_locked(std::uint64_t n) {
  auto& c = cache();
  if (auto it = c.find(n); it != c.end()) return *it->second;
  std::vector<BigInt> xn(n + 1);
  xn[0] = -1;
  xn[n] = 1;
  IntegerPolynomial poly(std::move(xn));
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto dm = poly.divmod(cyclotomic_locked(d));
    if (!dm.remainder.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    poly = std::move(dm.quotient);
  }
  auto [it, inserted] = c.emplace(n, std::make_unique<const IntegerPolynomial>(std::move(poly)));
  return *it->second;
}

void check_order(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("root-of-unity order must be positive");
  if (n > kMaxCyclotomicOrder)
    throw std::overflow_error("root-of-unity order " + std::to_string(n) + " exceeds the supported maximum");
}

// In-place reduction of a length-N residue modulo Phi_N.
void reduce_mod_phi(std::vector<BigInt>& r, std::uint64_t n) {
  const IntegerPolynomial& phi = cyclotomic_polynomial(n);
  const auto deg = static_cast<std::size_t>(phi.degree());
  std::vector<std::pair<std::size_t, BigInt>> sparse;
  for (std::size_t j = 0; j < deg; ++j)
    if (phi.coeffs()[j] != 0) sparse.emplace_back(j, phi.coeffs()[j]);
  for (std::size_t k = r.size(); k-- > deg;) {
    if (r[k] == 0) continue;
    const BigInt c = r[k];
    r[k] = 0;
    for (const auto& [j, pc] : sparse) r[k - deg + j] -= c * pc;
  }
}

using Sparse = std::map<std::uint64_t, BigInt>;

void add_term(Sparse& s, std::uint64_t k, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = s.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

// Vanishing of sum c_k zeta_N^k by descending the tower Q(zeta_N) / Q(zeta_{N/p}).
// If p^2 | N the powers zeta_N^t, t < p, form a basis over the subfield; otherwise the
// subfield is linearly disjoint from Q(zeta_p) and 1, zeta_p, ..., zeta_p^{p-2} form one.
bool sparse_is_zero(const Sparse& s, std::uint64_t n) {
  if (s.empty()) return true;
  if (n == 1) return false;  // a single nonzero rational coefficient
  const std::uint64_t p = smallest_prime_factor(n);
  const std::uint64_t m = n / p;

  if (m % p == 0) {
    std::vector<Sparse> parts(p);
    for (const auto& [k, c] : s) add_term(parts[k % p], (k / p) % m, c);
    for (const auto& part : parts)
      if (!sparse_is_zero(part, m)) return false;
    return true;
  }

  // zeta_N^k = zeta_p^(k x) * zeta_M^(k y) where x M + y p = 1
  const auto inv = [](std::uint64_t a, std::uint64_t mod) -> std::uint64_t {
    if (mod == 1) return 0;
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(mod), nr = static_cast<std::int64_t>(a % mod);
    while (nr != 0) {
      const std::int64_t q = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - q * nt);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(mod) : t);
  };
  const std::uint64_t x = inv(m % p, p);  // x M = 1 mod p
  const std::uint64_t y = inv(p % m, m);  // y p = 1 mod M
  std::vector<Sparse> parts(p);
  for (const auto& [k, c] : s) {
    const auto u = static_cast<std::uint64_t>((static_cast<unsigned __int128>(k) * x) % p);
    const auto v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(k) * y) % m);
    add_term(parts[u], v, c);
  }
  const Sparse& last = parts[p - 1];
  for (std::uint64_t u = 0; u + 1 < p; ++u) {
    Sparse diff = parts[u];
    for (const auto& [k, c] : last) add_term(diff, k, -c);
    if (!sparse_is_zero(diff, m)) return false;
  }
  return true;
}

}  // namespace

const IntegerPolynomial& cyclotomic_polynomial(std::uint64_t n) {
  check_order(n);
  std::lock_guard lock(cache_mutex());
  return cyclotomic_locked(n);
}

std::uint64_t common_order(std::span<const RootOfUnityTerm> terms) {
  BigInt n = 1;
  for (const auto& t : terms) {
    n = lcm(n, t.exponent.denominator());
    if (n > kMaxCyclotomicOrder)
      throw std::overflow_error("root-of-unity order " + n.str() + " exceeds the supported maximum");
  }
  return n.convert_to<std::uint64_t>();
}

CyclotomicElement::CyclotomicElement(std::uint64_t order) : order_(order) {
  check_order(order);
  coeffs_.assign(order, BigInt(0));
}

CyclotomicElement::CyclotomicElement(std::uint64_t order, std::vector<BigInt> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  check_order(order);
  if (coeffs_.size() != order) throw std::invalid_argument("coefficient vector length must equal the order");
}

CyclotomicElement CyclotomicElement::constant(std::uint64_t order, const BigInt& c) {
  CyclotomicElement e(order);
  e.coeffs_[0] = c;
  return e;
}

CyclotomicElement CyclotomicElement::root(std::uint64_t order, std::uint64_t k) {
  CyclotomicElement e(order);
  e.coeffs_[k % order] = 1;
  return e;
}

CyclotomicElement CyclotomicElement::from_terms(std::uint64_t order, std::span<const RootOfUnityTerm> terms) {
  CyclotomicElement e(order);
  for (const auto& t : terms) {
    const BigInt q = t.exponent.denominator();
    if (BigInt(order) % q != 0)
      throw std::invalid_argument("exponent " + t.exponent.to_string() + " is not an order-" +
                                  std::to_string(order) + " root");
    const BigInt idx = t.exponent.numerator() * (BigInt(order) / q);
    e.coeffs_[idx.convert_to<std::uint64_t>()] += t.coefficient;
  }
  return e;
}

CyclotomicElement CyclotomicElement::from_terms(std::span<const RootOfUnityTerm> terms) {
  return from_terms(common_order(terms), terms);
}

std::vector<BigInt> CyclotomicElement::canonical() const {
  std::vector<BigInt> r = coeffs_;
  reduce_mod_phi(r, order_);
  r.resize(euler_phi(order_));
  return r;
}

bool CyclotomicElement::is_zero() const {
  Sparse sp;
  for (std::uint64_t k = 0; k < order_; ++k)
    if (coeffs_[k] != 0) sp.emplace(k, coeffs_[k]);
  return sparse_is_zero(sp, order_);
}

CyclotomicElement CyclotomicElement::lifted(std::uint64_t m) const {
  if (m % order_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
  CyclotomicElement e(m);
  const std::uint64_t step = m / order_;
  for (std::uint64_t k = 0; k < order_; ++k) e.coeffs_[k * step] = coeffs_[k];
  return e;
}

namespace {

std::uint64_t joint_order(std::uint64_t a, std::uint64_t b) {
  const BigInt l = lcm(BigInt(a), BigInt(b));
  check_order(l > kMaxCyclotomicOrder ? kMaxCyclotomicOrder + 1 : l.convert_to<std::uint64_t>());
  return l.convert_to<std::uint64_t>();
}

}  // namespace

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  const std::uint64_t m = joint_order(order_, o.order_);
  if (m != order_) *this = lifted(m);
  const CyclotomicElement other = o.order_ == m ? o : o.lifted(m);
  for (std::uint64_t k = 0; k < m; ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) { return *this += -o; }

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement e = *this;
  for (auto& c : e.coeffs_) c = -c;
  return e;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  const std::uint64_t m = joint_order(a.order_, b.order_);
  const CyclotomicElement x = a.order_ == m ? a : a.lifted(m);
  const CyclotomicElement y = b.order_ == m ? b : b.lifted(m);
  CyclotomicElement out(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::uint64_t j = 0; j < m; ++j) {
      if (y.coeffs_[j] == 0) continue;
      std::uint64_t k = i + j;
      if (k >= m) k -= m;
      out.coeffs_[k] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return normalize_element(out);
}

CyclotomicElement operator*(CyclotomicElement a, std::int64_t s) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

CyclotomicElement operator/(const CyclotomicElement& a, std::int64_t s) {
  if (s == 0) throw std::domain_error("division of cyclotomic element by zero");
  CyclotomicElement n = normalize_element(a);
  for (auto& c : n.coeffs_) {
    if (c % s != 0) throw std::domain_error("cyclotomic element is not divisible by " + std::to_string(s));
    c /= s;
  }
  return n;
}

CyclotomicElement CyclotomicElement::conj() const {
  CyclotomicElement e(order_);
  for (std::uint64_t k = 0; k < order_; ++k) e.coeffs_[(order_ - k) % order_] = coeffs_[k];
  return e;
}

BigInt CyclotomicElement::remove_content() {
  *this = normalize_element(*this);
  BigInt g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  if (g > 1)
    for (auto& c : coeffs_) c /= g;
  return g;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) { return (a - b).is_zero(); }

std::complex<double> CyclotomicElement::to_complex() const {
  std::complex<double> s = 0;
  for (std::uint64_t k = 0; k < order_; ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order_);
    s += coeffs_[k].convert_to<double>() * std::polar(1.0, angle);
  }
  return s;
}

CyclotomicElement normalize_element(const CyclotomicElement& e) {
  std::vector<BigInt> r = e.coeffs();
  reduce_mod_phi(r, e.order());
  return CyclotomicElement(e.order(), std::move(r));
}

bool sum_is_zero(std::span<const RootOfUnityTerm> terms) {
  if (terms.empty()) return true;
  BigInt order = 1;
  for (const auto& t : terms) {
    order = lcm(order, t.exponent.denominator());
    if (order > kMaxSparseOrder)
      throw std::overflow_error("root-of-unity order " + order.str() + " exceeds the supported maximum");
  }
  const auto n = order.convert_to<std::uint64_t>();
  Sparse sp;
  for (const auto& t : terms) {
    const BigInt idx = t.exponent.numerator() * (BigInt(n) / t.exponent.denominator());
    add_term(sp, idx.convert_to<std::uint64_t>(), BigInt(t.coefficient));
  }
  return sparse_is_zero(sp, n);
}

}  // namespace spectral
