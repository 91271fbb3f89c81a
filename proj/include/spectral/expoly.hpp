#pragma once

#include "spectral/domain.hpp"
#include "spectral/rational.hpp"

#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

namespace spectral {

// sum_j coefficient_j * e^{2 pi i frequency_j xi}
class ExpPolynomial {
 public:
  struct Term {
    std::int64_t coefficient;
    Rational frequency;
    friend bool operator==(const Term&, const Term&) = default;
  };

  ExpPolynomial() = default;
  // Combines equal frequencies (first-occurrence order) and drops zero terms.
  explicit ExpPolynomial(std::vector<Term> terms);

  // Numerator of the Fourier transform of the indicator of any interval union:
  // one (+1, a_j + r_j) and one (-1, a_j) term per interval.
  static ExpPolynomial from_intervals(const IntervalUnion& omega);

  const std::vector<Term>& terms() const { return terms_; }
  // max frequency - min frequency (0 for fewer than two terms)
  Rational bandwidth() const;

 private:
  std::vector<Term> terms_;
};

// P_Omega for a normalized domain.
ExpPolynomial from_domain(const IntervalUnion& omega);

std::complex<double> eval_numeric(const ExpPolynomial& p, double xi);
// Phases reduced exactly modulo 1 before the floating-point step.
std::complex<double> eval_numeric(const ExpPolynomial& p, const Rational& xi);

// Fourier transform of the indicator at xi, taking value measure(omega) at 0.
std::complex<double> eval_chi_hat(const IntervalUnion& omega, double xi);

enum class ZeroMethod { exact, numeric };

struct ZeroVerdict {
  bool is_zero{false};
  ZeroMethod method{ZeroMethod::exact};
  std::optional<double> witness;  // |P(xi)|, numeric verdicts only
};

const char* to_string(ZeroMethod m);

// Membership of xi in the zero set; xi == 0 is a member by convention.
ZeroVerdict is_zero_exact(const ExpPolynomial& p, const Rational& xi);
// Numeric-only verdict for points without an exact representation.
ZeroVerdict is_zero_numeric(const ExpPolynomial& p, double xi, double tol);

// Approximate real zeros in [lo, hi]: sample |P|^2 on a grid of pitch at most
// 1 / (8 * bandwidth), refine each local minimum, keep those with |P| < tol.
std::vector<double> scan_zeros_numeric(const ExpPolynomial& p, double lo, double hi, double tol);

// CSV with header `xi,re_p,im_p,abs_chi_hat`, `samples` evenly spaced rows over [lo, hi].
void write_plot_csv(std::ostream& out, const IntervalUnion& omega, double lo, double hi, std::size_t samples);

}  // namespace spectral
