#pragma once

#include "spectral/cyclotomic.hpp"
#include "spectral/domain.hpp"
#include "spectral/point_sets.hpp"
#include "spectral/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spectral {

// Elementary coefficients S_1..S_n of prod (z - alpha_i) = z^n + S_1 z^{n-1} + ... + S_n
// from the power sums W_k = sum alpha_i^k, via
//   W_k + S_1 W_{k-1} + ... + S_{k-1} W_1 + k S_k = 0.
// T needs +, *, unary - and exact division by std::int64_t.
template <class T>
std::vector<T> power_sums_to_coeffs(std::span<const T> power_sums) {
  if (power_sums.empty()) throw std::invalid_argument("power_sums_to_coeffs needs at least one power sum");
  std::vector<T> s;
  s.reserve(power_sums.size());
  for (std::size_t k = 1; k <= power_sums.size(); ++k) {
    T acc = power_sums[k - 1];
    for (std::size_t i = 1; i < k; ++i) acc = acc + s[i - 1] * power_sums[k - i - 1];
    s.push_back(-acc / static_cast<std::int64_t>(k));
  }
  return s;
}

template <class T>
std::vector<T> power_sums_to_coeffs(const std::vector<T>& power_sums) {
  return power_sums_to_coeffs(std::span<const T>(power_sums));
}

struct APWitness {
  std::int64_t k;
  Rational value;  // the point that failed (an AP term or a zero-set probe)
};

struct APVerdict {
  Rational d;
  bool hypothesis_holds{false};
  bool full_ap_in_zeroset{false};
  bool d_is_integer{false};
  bool tiles{false};
  // (right-endpoint index, left-endpoint index) pairs with equal
  // e^{2 pi i d (a_j + r_j)} and e^{2 pi i d a_j'}; interval indices are zero-based.
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> pairing;
  std::optional<APWitness> failure_witness;
  std::int64_t spot_check_bound{0};
};

inline constexpr std::int64_t kDefaultSpotChecks = 50;

// Tests 0, d, ..., nd in the zero set and, when they are, derives the full
// progression dZ from the equality of the two endpoint polynomials.
APVerdict check_ap_zeroset(const IntervalUnion& omega, const Rational& d,
                           std::int64_t spot_checks = kDefaultSpotChecks);

// a, a+d, ..., a+nd in the window of a spectrum: confirms a + dZ against every
// window point. Throws PreconditionError if the window cannot hold those n+1 terms.
APVerdict extend_ap_in_spectrum(const IntervalUnion& omega, const DiscreteSampleSet& window,
                                const Rational& a, const Rational& d,
                                std::int64_t spot_checks = kDefaultSpotChecks);

// True iff the fold of omega modulo 1/d is the constant d.
bool verify_tiling(const IntervalUnion& omega, std::int64_t d);

}  // namespace spectral
