#pragma once

// Fixtures and independent oracles shared by the unit suites and the acceptance runner.
// Oracles never call into the library's zero tests: they work from interval endpoints
// with high-precision floats, closed-form factorizations, or brute-force counting.

#include "spectral/domain.hpp"
#include "spectral/point_sets.hpp"
#include "spectral/rational.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace testsupport {

using spectral::BigInt;
using spectral::IntervalUnion;
using spectral::PeriodicSet;
using spectral::Rational;

inline Rational q(const char* s) { return Rational::parse(s); }

inline IntervalUnion dom(std::initializer_list<std::pair<const char*, const char*>> ends) {
  std::vector<std::pair<Rational, Rational>> v;
  for (const auto& [l, r] : ends) v.emplace_back(q(l), q(r));
  return IntervalUnion::from_endpoints(v);
}

inline PeriodicSet pset(const char* period, std::initializer_list<const char*> offs) {
  std::vector<Rational> v;
  for (const char* o : offs) v.push_back(q(o));
  return PeriodicSet(q(period), std::move(v));
}

inline IntervalUnion omega_a() { return dom({{"0", "1"}}); }
inline IntervalUnion omega_b() { return dom({{"0", "1/2"}, {"1", "3/2"}}); }
inline IntervalUnion omega_c() { return dom({{"0", "1/3"}, {"1", "4/3"}, {"2", "7/3"}}); }
inline IntervalUnion omega_e() { return dom({{"0", "1/2"}, {"5/4", "7/4"}}); }

inline PeriodicSet lattice_z() { return pset("1", {"0"}); }
inline PeriodicSet lambda_b() { return pset("2", {"0", "1/2"}); }
inline PeriodicSet lambda_c() { return pset("3", {"0", "1/3", "2/3"}); }

// ---- closed-form zero sets of the golden domains ----

inline bool in_z(const Rational& x) { return x.is_integer(); }

// P_A(x) = e(x) - 1
inline bool zero_a(const Rational& x) { return in_z(x); }
// P_B(x) = (e(x/2) - 1)(1 + e(x))
inline bool zero_b(const Rational& x) { return in_z(x / Rational(2)) || in_z(x - q("1/2")); }
// P_C(x) = (e(x/3) - 1)(1 + e(x) + e(2x))
inline bool zero_c(const Rational& x) {
  return in_z(x / Rational(3)) || in_z(x - q("1/3")) || in_z(x + q("1/3"));
}

// ---- high-precision evaluation straight from endpoints ----

using HP = boost::multiprecision::cpp_bin_float_50;

inline HP hp_value(const Rational& r) {
  return HP(r.numerator().str()) / HP(r.denominator().str());
}

// |sum_j e(xi b_j) - e(xi a_j)| at 50 digits; the phase is reduced mod 1 exactly first.
inline HP hp_abs_p(const IntervalUnion& omega, const Rational& xi) {
  const HP two_pi = 2 * boost::math::constants::pi<HP>();
  HP re = 0, im = 0;
  auto add = [&](const Rational& endpoint, int sign) {
    const HP t = two_pi * hp_value((xi * endpoint).frac());
    re += sign * cos(t);
    im += sign * sin(t);
  };
  for (const auto& iv : omega.intervals()) {
    add(iv.right(), 1);
    add(iv.left, -1);
  }
  return sqrt(re * re + im * im);
}

inline bool hp_is_zero(const IntervalUnion& omega, const Rational& xi) {
  return xi.is_zero() || hp_abs_p(omega, xi) < HP("1e-35");
}

// |sum_j c_j e(theta_j)| at 50 digits.
inline HP hp_abs_sum(const std::vector<std::pair<std::int64_t, Rational>>& terms) {
  const HP two_pi = 2 * boost::math::constants::pi<HP>();
  HP re = 0, im = 0;
  for (const auto& [c, th] : terms) {
    const HP t = two_pi * hp_value(th.frac());
    re += c * cos(t);
    im += c * sin(t);
  }
  return sqrt(re * re + im * im);
}

// #{k in Z : x + k/d in omega}
inline std::int64_t brute_fold(const IntervalUnion& omega, const Rational& d, const Rational& x) {
  const Rational step = Rational(1) / d;
  const BigInt k_lo = ((omega.leftmost() - x) * d).floor() - 1;
  const BigInt k_hi = ((omega.rightmost() - x) * d).ceil() + 1;
  std::int64_t c = 0;
  for (BigInt k = k_lo; k <= k_hi; ++k)
    if (omega.contains(x + step * Rational(k))) ++c;
  return c;
}

// Brute fold sampled at every multiple of 1/(d * grid) in [0, 1/d).
inline bool brute_fold_constant(const IntervalUnion& omega, const Rational& d, std::int64_t grid,
                                std::int64_t expected) {
  const Rational period = Rational(1) / d;
  for (std::int64_t j = 0; j < grid; ++j) {
    const Rational x = period * Rational(j) / Rational(grid);
    if (brute_fold(omega, d, x) != expected) return false;
  }
  return true;
}

// ---- random generation ----

inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_den, std::int64_t span) {
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  const std::int64_t q_ = den(rng);
  std::uniform_int_distribution<std::int64_t> num(-span * q_, span * q_);
  return Rational(BigInt(num(rng)), BigInt(q_));
}

struct TilingSample {
  IntervalUnion omega;
  std::int64_t d;
};

// A normalized union of at most `max_pieces` intervals that d-tiles: [0, 1/d) is cut into
// one or two cells and each cell is copied at d distinct integer shifts over d.
inline TilingSample random_d_tiler(std::mt19937_64& rng, std::int64_t max_d, std::size_t max_pieces) {
  std::uniform_int_distribution<std::int64_t> pick_d(1, max_d);
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    const std::int64_t d = pick_d(rng);
    const Rational cell = Rational(1) / Rational(d);
    std::vector<Rational> cuts{Rational(0)};
    if (coin(rng)) {
      std::uniform_int_distribution<std::int64_t> num(1, 5);
      cuts.push_back(cell * Rational(BigInt(num(rng)), BigInt(6)));
    }
    cuts.push_back(cell);

    std::vector<std::pair<Rational, Rational>> ends;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      // d shifts as a few runs of consecutive integers
      std::vector<std::int64_t> shifts;
      std::int64_t at = 0;
      std::uniform_int_distribution<std::int64_t> gap(1, 3), run(1, d);
      while (static_cast<std::int64_t>(shifts.size()) < d) {
        const std::int64_t len = std::min<std::int64_t>(run(rng), d - static_cast<std::int64_t>(shifts.size()));
        for (std::int64_t i = 0; i < len; ++i) shifts.push_back(at++);
        at += gap(rng);
      }
      for (auto s : shifts) ends.emplace_back(cuts[c] + cell * Rational(s), cuts[c + 1] + cell * Rational(s));
    }
    auto omega = IntervalUnion::from_endpoints(ends);
    if (omega.size() > max_pieces) continue;
    omega = omega.translated(-omega.leftmost());
    return {omega, d};
  }
}

}  // namespace testsupport
