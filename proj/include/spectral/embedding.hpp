#pragma once

#include "spectral/domain.hpp"
#include "spectral/expoly.hpp"
#include "spectral/point_sets.hpp"
#include "spectral/rational.hpp"

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spectral {

// phi(x) = ((e^{2 pi i (a_j + r_j) x})_j, (e^{2 pi i a_j x})_j) on the torus T^n x T^n.
struct PhiVector {
  Rational base_point;
  std::vector<std::complex<double>> first;
  std::vector<std::complex<double>> second;
  // Exact phases in [0, 1): first entries then second entries.
  std::vector<Rational> first_phase;
  std::vector<Rational> second_phase;

  std::size_t dim() const { return first.size(); }
};

PhiVector phi(const IntervalUnion& omega, const Rational& x);

// <v1, w1> - <v2, w2>, conjugate-linear in the second argument.
std::complex<double> null_form(const PhiVector& v, const PhiVector& w);
// Exact decision of null_form(v, w) == 0 as one vanishing-sum test.
bool null_form_is_zero(const PhiVector& v, const PhiVector& w);

struct SpanBasis {
  std::vector<Rational> base_points;  // exact path
  std::vector<double> numeric_points;  // numeric path
  std::size_t rank{0};
  ZeroMethod method{ZeroMethod::exact};
};

// Greedy left-to-right basis of span phi(points), by fraction-free elimination
// over Z[zeta_N]. A rank above n on a mutually null family throws std::logic_error.
SpanBasis rank_span(const IntervalUnion& omega, const DiscreteSampleSet& points);
// Floating-point variant: singular values above `threshold` count toward the rank.
inline constexpr double kNumericRankThreshold = 1e-8;
SpanBasis rank_span_numeric(const IntervalUnion& omega, std::span<const double> points,
                            double threshold = kNumericRankThreshold);

// x belongs to the spectrum determined by `basis` iff x - y is in the zero set for every basis point y.
bool membership_test(const IntervalUnion& omega, const SpanBasis& basis, const Rational& x);

// basis + d contained in the window. Throws PreconditionError if the basis is not inside the window.
bool basis_translate_period(const IntervalUnion& omega, const DiscreteSampleSet& window,
                            const SpanBasis& basis, const Rational& d);

struct ExtensionCertificate {
  bool orthogonal{false};
  bool ap_hypothesis{false};     // 0, d, ..., nd in the zero set
  std::size_t pairs_checked{0};
  std::int64_t shift_bound{0};   // k ranged over [-bound, bound]
  std::optional<std::string> failure;
};

struct PeriodicExtension {
  PeriodicSet set;
  ExtensionCertificate certificate;
};

// Gamma + dZ for a mutually null family Gamma whose basis has a translate by d
// inside Gamma. Throws PreconditionError with a witness when that fails.
PeriodicExtension periodic_extension(const IntervalUnion& omega, const DiscreteSampleSet& gamma,
                                     const SpanBasis& basis, const Rational& d);

}  // namespace spectral
