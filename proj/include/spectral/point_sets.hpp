#pragma once

#include "spectral/rational.hpp"

#include <optional>
#include <vector>

namespace spectral {

// Finite strictly increasing list of rational points, e.g. a window of a
// candidate spectrum.
class DiscreteSampleSet {
 public:
  DiscreteSampleSet() = default;
  // Throws std::invalid_argument unless `points` is strictly increasing.
  explicit DiscreteSampleSet(std::vector<Rational> points);
  // Sorts; rejects duplicates.
  static DiscreteSampleSet from_unsorted(std::vector<Rational> points);

  const std::vector<Rational>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Rational& operator[](std::size_t i) const { return points_[i]; }
  const Rational& front() const { return points_.front(); }
  const Rational& back() const { return points_.back(); }

  bool contains(const Rational& x) const;
  // Points in [lo, hi).
  std::vector<Rational> in_half_open(const Rational& lo, const Rational& hi) const;

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Rational> points_;
};

// {offsets} + period * Z.
class PeriodicSet {
 public:
  // Throws std::invalid_argument unless period > 0 and the offsets are
  // strictly increasing inside [0, period).
  PeriodicSet(Rational period, std::vector<Rational> offsets);
  // Reduces every point modulo the period and removes duplicates.
  static PeriodicSet from_points(Rational period, const std::vector<Rational>& points);

  const Rational& period() const { return period_; }
  const std::vector<Rational>& offsets() const { return offsets_; }
  std::size_t size() const { return offsets_.size(); }

  // offsets / period
  Rational density() const;
  bool contains(const Rational& x) const;
  // All members in the closed interval [lo, hi].
  DiscreteSampleSet sample(const Rational& lo, const Rational& hi) const;
  // Smallest p = period / j (j a positive integer) leaving the set invariant.
  Rational minimal_period() const;
  // Same set expressed with the offsets translated by t.
  PeriodicSet translated(const Rational& t) const;
  // Member set divided by s (s > 0).
  PeriodicSet scaled_down(const Rational& s) const;

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

 private:
  Rational period_;
  std::vector<Rational> offsets_;
};

}  // namespace spectral
