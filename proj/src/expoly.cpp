#include "spectral/expoly.hpp"

#include "spectral/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace spectral {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

ExpPolynomial::ExpPolynomial(std::vector<Term> terms) {
  for (auto& t : terms) {
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const Term& u) { return u.frequency == t.frequency; });
    if (it != terms_.end()) {
      it->coefficient += t.coefficient;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.coefficient == 0; });
}

ExpPolynomial ExpPolynomial::from_intervals(const IntervalUnion& omega) {
  std::vector<Term> terms;
  terms.reserve(2 * omega.size());
  for (const auto& iv : omega.intervals()) {
    terms.push_back({+1, iv.right()});
    terms.push_back({-1, iv.left});
  }
  return ExpPolynomial(std::move(terms));
}

Rational ExpPolynomial::bandwidth() const {
  if (terms_.size() < 2) return Rational(0);
  auto [lo, hi] = std::minmax_element(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return a.frequency < b.frequency;
  });
  return hi->frequency - lo->frequency;
}

ExpPolynomial from_domain(const IntervalUnion& omega) {
  require_normalized(omega, "from_domain");
  return ExpPolynomial::from_intervals(omega);
}

std::complex<double> eval_numeric(const ExpPolynomial& p, double xi) {
  std::complex<double> s = 0;
  for (const auto& t : p.terms())
    s += static_cast<double>(t.coefficient) * std::polar(1.0, kTwoPi * t.frequency.to_double() * xi);
  return s;
}

std::complex<double> eval_numeric(const ExpPolynomial& p, const Rational& xi) {
  std::complex<double> s = 0;
  for (const auto& t : p.terms()) {
    const double phase = (t.frequency * xi).frac().to_double();
    s += static_cast<double>(t.coefficient) * std::polar(1.0, kTwoPi * phase);
  }
  return s;
}

std::complex<double> eval_chi_hat(const IntervalUnion& omega, double xi) {
  if (xi == 0.0) return {measure(omega).to_double(), 0.0};
  const ExpPolynomial p = ExpPolynomial::from_intervals(omega);
  return eval_numeric(p, xi) / std::complex<double>(0.0, kTwoPi * xi);
}

const char* to_string(ZeroMethod m) { return m == ZeroMethod::exact ? "exact" : "numeric"; }

ZeroVerdict is_zero_exact(const ExpPolynomial& p, const Rational& xi) {
  if (xi.is_zero()) return {true, ZeroMethod::exact, std::nullopt};
  std::vector<RootOfUnityTerm> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) terms.emplace_back(t.coefficient, t.frequency * xi);
  return {sum_is_zero(terms), ZeroMethod::exact, std::nullopt};
}

ZeroVerdict is_zero_numeric(const ExpPolynomial& p, double xi, double tol) {
  if (xi == 0.0) return {true, ZeroMethod::numeric, 0.0};
  const double mag = std::abs(eval_numeric(p, xi));
  return {mag <= tol, ZeroMethod::numeric, mag};
}

namespace {

std::complex<double> derivative(const ExpPolynomial& p, double xi) {
  std::complex<double> s = 0;
  for (const auto& t : p.terms()) {
    const double f = t.frequency.to_double();
    s += static_cast<double>(t.coefficient) * std::complex<double>(0.0, kTwoPi * f) *
         std::polar(1.0, kTwoPi * f * xi);
  }
  return s;
}

// Minimizes |P| over [a, b], then polishes with Gauss-Newton steps on |P|^2.
double refine_minimum(const ExpPolynomial& p, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto mag = [&](double x) { return std::abs(eval_numeric(p, x)); };
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = mag(c);
  double fd = mag(d);
  for (int it = 0; it < 200 && (b - a) > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = mag(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = mag(d);
    }
  }
  double x = fc < fd ? c : d;
  for (const double edge : {a, b}) {
    if (mag(edge) < mag(x)) x = edge;
  }
  double fx = mag(x);
  for (int it = 0; it < 8 && fx > 0.0; ++it) {
    const std::complex<double> v = eval_numeric(p, x);
    const std::complex<double> dv = derivative(p, x);
    const double denom = std::norm(dv);
    if (denom == 0.0) break;
    const double step = -std::real(std::conj(dv) * v) / denom;
    const double y = x + step;
    const double fy = mag(y);
    if (!(fy < fx)) break;
    x = y;
    fx = fy;
  }
  return x;
}

}  // namespace

std::vector<double> scan_zeros_numeric(const ExpPolynomial& p, double lo, double hi, double tol) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("zero scan needs a finite range with lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("zero scan tolerance must be positive");
  if (p.terms().empty()) throw std::invalid_argument("zero scan of the zero polynomial");

  const double width = p.bandwidth().to_double();
  const double max_pitch = width > 0.0 ? 1.0 / (8.0 * width) : (hi - lo);
  const auto steps = static_cast<std::size_t>(std::ceil((hi - lo) / max_pitch));
  const double pitch = (hi - lo) / static_cast<double>(std::max<std::size_t>(steps, 1));

  std::vector<double> grid(steps + 1);
  std::vector<double> energy(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    grid[i] = i == steps ? hi : lo + pitch * static_cast<double>(i);
    energy[i] = std::norm(eval_numeric(p, grid[i]));
  }

  std::vector<double> zeros;
  for (std::size_t i = 0; i <= steps; ++i) {
    const bool left_ok = i == 0 || energy[i] <= energy[i - 1];
    const bool right_ok = i == steps || energy[i] <= energy[i + 1];
    if (!left_ok || !right_ok) continue;
    const double a = std::max(lo, grid[i] - pitch);
    const double b = std::min(hi, grid[i] + pitch);
    const double x = refine_minimum(p, a, b);
    if (std::abs(eval_numeric(p, x)) < tol) zeros.push_back(x);
  }

  std::sort(zeros.begin(), zeros.end());
  // One grid minimum resolves at most one zero, so refinements closer than
  // half a pitch are the same zero reached twice.
  const double merge = std::max(tol, pitch / 2.0);
  std::vector<double> unique;
  for (double z : zeros) {
    if (unique.empty() || z - unique.back() > merge) unique.push_back(z);
  }
  return unique;
}

void write_plot_csv(std::ostream& out, const IntervalUnion& omega, double lo, double hi, std::size_t samples) {
  if (!(lo < hi)) throw std::invalid_argument("plot range needs lo < hi");
  if (samples < 2) throw std::invalid_argument("plot needs at least two samples");
  const ExpPolynomial p = ExpPolynomial::from_intervals(omega);
  const auto old_precision = out.precision(12);
  out << "xi,re_p,im_p,abs_chi_hat\n";
  for (std::size_t i = 0; i < samples; ++i) {
    const double xi = i + 1 == samples ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    const std::complex<double> v = eval_numeric(p, xi);
    out << xi << ',' << v.real() << ',' << v.imag() << ',' << std::abs(eval_chi_hat(omega, xi)) << '\n';
  }
  out.precision(old_precision);
}

}  // namespace spectral
