#include "spectral/newton_ap.hpp"

#include "spectral/errors.hpp"
#include "spectral/expoly.hpp"

#include <string>

namespace spectral {

namespace {

bool fold_is_constant_d(const IntervalUnion& omega, const Rational& d) {
  const MultiplicityFunction f = fold_multiplicity(omega, d);
  return f.is_constant() && Rational(f.constant_value()) == d;
}

std::vector<CyclotomicElement> power_sums(std::uint64_t order, const std::vector<std::uint64_t>& indices,
                                          std::size_t count) {
  std::vector<CyclotomicElement> w;
  w.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    CyclotomicElement e(order);
    for (auto idx : indices) e += CyclotomicElement::root(order, (idx * k) % order);
    w.push_back(std::move(e));
  }
  return w;
}

}  // namespace

APVerdict check_ap_zeroset(const IntervalUnion& omega, const Rational& d, std::int64_t spot_checks) {
  if (d.is_zero()) throw std::invalid_argument("AP step d must be nonzero");
  if (d.sign() < 0) {
    // the zero set is symmetric, so -d gives the mirrored verdict
    APVerdict v = check_ap_zeroset(omega, -d, spot_checks);
    v.d = d;
    if (v.failure_witness) v.failure_witness->k = -v.failure_witness->k;
    return v;
  }
  const ExpPolynomial p = from_domain(omega);
  const std::size_t n = omega.size();

  APVerdict v;
  v.d = d;
  v.d_is_integer = d.is_integer();
  v.tiles = fold_is_constant_d(omega, d);
  v.spot_check_bound = spot_checks;

  for (std::size_t k = 1; k <= n; ++k) {
    const Rational xi = d * Rational(static_cast<std::int64_t>(k));
    if (!is_zero_exact(p, xi).is_zero) {
      v.failure_witness = APWitness{static_cast<std::int64_t>(k), xi};
      return v;
    }
  }
  v.hypothesis_holds = true;

  // zeta_{2j-1} = e^{2 pi i d (a_j + r_j)}, zeta_{2j} = e^{2 pi i d a_j}
  std::vector<RootOfUnityTerm> all;
  std::vector<Rational> right_exp;
  std::vector<Rational> left_exp;
  for (const auto& iv : omega.intervals()) {
    right_exp.push_back((d * iv.right()).frac());
    left_exp.push_back((d * iv.left).frac());
    all.emplace_back(1, right_exp.back());
    all.emplace_back(1, left_exp.back());
  }
  const std::uint64_t order = common_order(all);
  auto index_of = [order](const Rational& e) {
    return (e.numerator() * (BigInt(order) / e.denominator())).convert_to<std::uint64_t>();
  };
  std::vector<std::uint64_t> right_idx;
  std::vector<std::uint64_t> left_idx;
  for (std::size_t j = 0; j < n; ++j) {
    right_idx.push_back(index_of(right_exp[j]));
    left_idx.push_back(index_of(left_exp[j]));
  }

  const auto w_right = power_sums(order, right_idx, n);
  const auto w_left = power_sums(order, left_idx, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(w_right[k] == w_left[k]))
      throw std::logic_error("power sums disagree although the zero-set hypothesis holds");
  }
  const auto s_right = power_sums_to_coeffs(w_right);
  const auto s_left = power_sums_to_coeffs(w_left);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(s_right[k] == s_left[k])) throw std::logic_error("endpoint polynomials differ");
  }

  // Equal polynomials have equal root multisets; match in index order.
  std::vector<std::pair<std::size_t, std::size_t>> pairing;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!used[j] && right_idx[i] == left_idx[j]) {
        used[j] = true;
        pairing.emplace_back(i, j);
        matched = true;
        break;
      }
    }
    if (!matched) throw std::logic_error("root multisets of equal polynomials do not match");
  }
  v.pairing = std::move(pairing);

  v.full_ap_in_zeroset = true;
  for (std::int64_t k = -spot_checks; k <= spot_checks; ++k) {
    const Rational xi = d * Rational(k);
    if (!is_zero_exact(p, xi).is_zero) {
      v.full_ap_in_zeroset = false;
      v.failure_witness = APWitness{k, xi};
      break;
    }
  }
  return v;
}

APVerdict extend_ap_in_spectrum(const IntervalUnion& omega, const DiscreteSampleSet& window,
                                const Rational& a, const Rational& d, std::int64_t spot_checks) {
  if (d.sign() <= 0) throw std::invalid_argument("AP step d must be positive, got " + d.to_string());
  require_normalized(omega, "extend_ap_in_spectrum");
  const auto n = static_cast<std::int64_t>(omega.size());
  const Rational last = a + d * Rational(n);
  if (window.empty() || a < window.front() || window.back() < last)
    throw PreconditionError("window does not span the " + std::to_string(n + 1) + " progression terms",
                            "[" + a.to_string() + ", " + last.to_string() + "]");

  APVerdict v;
  v.d = d;
  v.d_is_integer = d.is_integer();
  v.spot_check_bound = spot_checks;
  for (std::int64_t k = 0; k <= n; ++k) {
    const Rational term = a + d * Rational(k);
    if (!window.contains(term)) {
      v.tiles = fold_is_constant_d(omega, d);
      v.failure_witness = APWitness{k, term};
      return v;
    }
  }

  APVerdict base = check_ap_zeroset(omega, d, spot_checks);
  base.spot_check_bound = spot_checks;
  if (!base.full_ap_in_zeroset) return base;

  const ExpPolynomial p = from_domain(omega);
  for (const auto& lambda : window) {
    const Rational rel = lambda - a;
    for (std::int64_t k = -spot_checks; k <= spot_checks; ++k) {
      const Rational xi = d * Rational(k) - rel;
      if (!is_zero_exact(p, xi).is_zero) {
        base.full_ap_in_zeroset = false;
        base.failure_witness = APWitness{k, xi};
        return base;
      }
    }
  }
  // Every term of a + dZ inside the window's span must be present.
  const BigInt k_lo = ((window.front() - a) / d).ceil();
  const BigInt k_hi = ((window.back() - a) / d).floor();
  for (BigInt k = k_lo; k <= k_hi; ++k) {
    const Rational term = a + d * Rational(k);
    if (!window.contains(term)) {
      base.full_ap_in_zeroset = false;
      base.failure_witness = APWitness{to_int64(k), term};
      return base;
    }
  }
  return base;
}

bool verify_tiling(const IntervalUnion& omega, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("tiling multiplicity d must be at least 1");
  require_normalized(omega, "verify_tiling");
  return fold_is_constant_d(omega, Rational(d));
}

}  // namespace spectral
