#pragma once

#include "spectral/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace spectral {

// Half-open interval [left, left + length).
struct Interval {
  Rational left;
  Rational length;

  Rational right() const { return left + length; }
  bool contains(const Rational& x) const { return left <= x && x < right(); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite union of pairwise disjoint half-open intervals with rational
// endpoints, kept sorted with touching pieces merged.
class IntervalUnion {
 public:
  // Sorts the pieces and merges touching ones. Throws std::invalid_argument
  // for an empty list, a non-positive length or overlapping pieces.
  static IntervalUnion create(std::vector<Interval> pieces);
  // Same, from [left, right) endpoint pairs.
  static IntervalUnion from_endpoints(std::span<const std::pair<Rational, Rational>> pairs);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }

  Rational leftmost() const { return intervals_.front().left; }
  Rational rightmost() const { return intervals_.back().right(); }
  bool contains(const Rational& x) const;
  // Leftmost point 0 and total measure 1.
  bool is_normalized() const;
  // Least common multiple of all endpoint denominators.
  BigInt endpoint_denominator_lcm() const;

  IntervalUnion translated(const Rational& t) const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  explicit IntervalUnion(std::vector<Interval> v) : intervals_(std::move(v)) {}
  std::vector<Interval> intervals_;
};

// x -> scale * x + shift.
struct AffineMap {
  Rational scale{1};
  Rational shift{0};

  static AffineMap identity() { return {}; }
  Rational apply(const Rational& x) const { return scale * x + shift; }
  bool is_identity() const { return scale == 1 && shift == 0; }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

IntervalUnion apply(const AffineMap& map, const IntervalUnion& omega);

Rational measure(const IntervalUnion& omega);

struct NormalizedDomain {
  IntervalUnion domain;
  AffineMap map;  // sends the input onto `domain`
};

// Affinely rescales omega to leftmost point 0 and measure 1.
NormalizedDomain normalize_domain(const IntervalUnion& omega);

// Throws PreconditionError unless omega is normalized.
void require_normalized(const IntervalUnion& omega, const char* op);

// Step function F(x) = #{k in Z : x + k/d in omega} on [0, 1/d).
class MultiplicityFunction {
 public:
  struct Piece {
    Rational lo;
    Rational hi;
    std::int64_t count;
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  MultiplicityFunction(Rational d, std::vector<Piece> pieces);

  const Rational& d() const { return d_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_constant() const { return pieces_.size() == 1; }
  // Value when constant; throws std::logic_error otherwise.
  std::int64_t constant_value() const;
  // Sum of count * length over the pieces; equals the measure of the folded set.
  Rational integral() const;
  std::int64_t at(const Rational& x) const;

 private:
  Rational d_;
  std::vector<Piece> pieces_;
};

// Exact sweep of omega folded modulo 1/d. Adjacent pieces with equal counts
// are merged. Does not require a normalized domain.
MultiplicityFunction fold_multiplicity(const IntervalUnion& omega, const Rational& d);

}  // namespace spectral
