#include "spectral/point_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectral {

DiscreteSampleSet::DiscreteSampleSet(std::vector<Rational> points) : points_(std::move(points)) {
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1] < points_[i]))
      throw std::invalid_argument("sample points must be strictly increasing (at " +
                                  points_[i].to_string() + ")");
  }
}

DiscreteSampleSet DiscreteSampleSet::from_unsorted(std::vector<Rational> points) {
  std::sort(points.begin(), points.end());
  return DiscreteSampleSet(std::move(points));
}

bool DiscreteSampleSet::contains(const Rational& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

std::vector<Rational> DiscreteSampleSet::in_half_open(const Rational& lo, const Rational& hi) const {
  auto first = std::lower_bound(points_.begin(), points_.end(), lo);
  auto last = std::lower_bound(points_.begin(), points_.end(), hi);
  return {first, std::max(first, last)};
}

PeriodicSet::PeriodicSet(Rational period, std::vector<Rational> offsets)
    : period_(std::move(period)), offsets_(std::move(offsets)) {
  if (period_.sign() <= 0) throw std::invalid_argument("period must be positive");
  if (offsets_.empty()) throw std::invalid_argument("periodic set needs at least one offset");
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    if (offsets_[i].sign() < 0 || !(offsets_[i] < period_))
      throw std::invalid_argument("offset " + offsets_[i].to_string() + " outside [0, " +
                                  period_.to_string() + ")");
    if (i > 0 && !(offsets_[i - 1] < offsets_[i]))
      throw std::invalid_argument("offsets must be strictly increasing");
  }
}

PeriodicSet PeriodicSet::from_points(Rational period, const std::vector<Rational>& points) {
  if (period.sign() <= 0) throw std::invalid_argument("period must be positive");
  std::vector<Rational> offs;
  offs.reserve(points.size());
  for (const auto& p : points) offs.push_back(p.mod(period));
  std::sort(offs.begin(), offs.end());
  offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
  return PeriodicSet(std::move(period), std::move(offs));
}

Rational PeriodicSet::density() const { return Rational(static_cast<std::int64_t>(offsets_.size())) / period_; }

bool PeriodicSet::contains(const Rational& x) const {
  return std::binary_search(offsets_.begin(), offsets_.end(), x.mod(period_));
}

DiscreteSampleSet PeriodicSet::sample(const Rational& lo, const Rational& hi) const {
  std::vector<Rational> pts;
  if (hi < lo) return DiscreteSampleSet();
  const BigInt k_lo = (lo / period_).floor();
  const BigInt k_hi = (hi / period_).floor();
  for (BigInt k = k_lo; k <= k_hi; ++k) {
    const Rational base = period_ * Rational(k);
    for (const auto& o : offsets_) {
      const Rational p = base + o;
      if (lo <= p && p <= hi) pts.push_back(p);
    }
  }
  return DiscreteSampleSet(std::move(pts));
}

Rational PeriodicSet::minimal_period() const {
  const auto m = static_cast<std::int64_t>(offsets_.size());
  // A period p = period/j forces j | #offsets.
  for (std::int64_t j = m; j >= 2; --j) {
    if (m % j != 0) continue;
    const Rational p = period_ / Rational(j);
    bool invariant = true;
    for (const auto& o : offsets_) {
      if (!contains(o + p)) {
        invariant = false;
        break;
      }
    }
    if (invariant) return p;
  }
  return period_;
}

PeriodicSet PeriodicSet::translated(const Rational& t) const {
  std::vector<Rational> pts = offsets_;
  for (auto& p : pts) p += t;
  return from_points(period_, pts);
}

PeriodicSet PeriodicSet::scaled_down(const Rational& s) const {
  if (s.sign() <= 0) throw std::invalid_argument("scale must be positive");
  std::vector<Rational> pts = offsets_;
  for (auto& p : pts) p /= s;
  return PeriodicSet(period_ / s, std::move(pts));
}

}  // namespace spectral
