#include "spectral/domain.hpp"

#include "spectral/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spectral {

IntervalUnion IntervalUnion::create(std::vector<Interval> pieces) {
  if (pieces.empty()) throw std::invalid_argument("interval union needs at least one interval");
  for (const auto& p : pieces) {
    if (p.length.sign() <= 0)
      throw std::invalid_argument("interval at " + p.left.to_string() + " has non-positive length");
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  std::vector<Interval> merged;
  merged.reserve(pieces.size());
  for (auto& p : pieces) {
    if (!merged.empty()) {
      Interval& last = merged.back();
      const Rational last_right = last.right();
      if (p.left < last_right)
        throw std::invalid_argument("intervals [" + last.left.to_string() + "," +
                                    last_right.to_string() + ") and [" + p.left.to_string() + "," +
                                    p.right().to_string() + ") overlap");
      if (p.left == last_right) {
        last.length += p.length;
        continue;
      }
    }
    merged.push_back(std::move(p));
  }
  return IntervalUnion(std::move(merged));
}

IntervalUnion IntervalUnion::from_endpoints(std::span<const std::pair<Rational, Rational>> pairs) {
  std::vector<Interval> pieces;
  pieces.reserve(pairs.size());
  for (const auto& [l, r] : pairs) pieces.push_back({l, r - l});
  return create(std::move(pieces));
}

bool IntervalUnion::contains(const Rational& x) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](const Rational& v, const Interval& iv) { return v < iv.left; });
  if (it == intervals_.begin()) return false;
  return std::prev(it)->contains(x);
}

bool IntervalUnion::is_normalized() const { return leftmost() == 0 && measure(*this) == 1; }

BigInt IntervalUnion::endpoint_denominator_lcm() const {
  BigInt q = 1;
  for (const auto& iv : intervals_) {
    q = lcm(q, iv.left.denominator());
    q = lcm(q, iv.right().denominator());
  }
  return q;
}

IntervalUnion IntervalUnion::translated(const Rational& t) const {
  std::vector<Interval> v = intervals_;
  for (auto& iv : v) iv.left += t;
  return IntervalUnion(std::move(v));
}

IntervalUnion apply(const AffineMap& map, const IntervalUnion& omega) {
  if (map.scale.is_zero()) throw std::invalid_argument("affine map with zero scale");
  std::vector<Interval> pieces;
  for (const auto& iv : omega.intervals()) {
    Rational a = map.apply(iv.left);
    Rational b = map.apply(iv.right());
    if (b < a) std::swap(a, b);
    pieces.push_back({a, b - a});
  }
  return IntervalUnion::create(std::move(pieces));
}

Rational measure(const IntervalUnion& omega) {
  Rational total;
  for (const auto& iv : omega.intervals()) total += iv.length;
  return total;
}

NormalizedDomain normalize_domain(const IntervalUnion& omega) {
  const Rational mu = measure(omega);
  AffineMap map{Rational(1) / mu, -omega.leftmost() / mu};
  return {apply(map, omega), map};
}

void require_normalized(const IntervalUnion& omega, const char* op) {
  if (!omega.is_normalized())
    throw PreconditionError(std::string(op) + " requires a normalized domain (leftmost point 0, measure 1)",
                            "leftmost=" + omega.leftmost().to_string() +
                                " measure=" + measure(omega).to_string());
}

MultiplicityFunction::MultiplicityFunction(Rational d, std::vector<Piece> pieces)
    : d_(std::move(d)), pieces_(std::move(pieces)) {}

std::int64_t MultiplicityFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("multiplicity function is not constant");
  return pieces_.front().count;
}

Rational MultiplicityFunction::integral() const {
  Rational s;
  for (const auto& p : pieces_) s += Rational(p.count) * (p.hi - p.lo);
  return s;
}

std::int64_t MultiplicityFunction::at(const Rational& x) const {
  const Rational y = x.mod(Rational(1) / d_);
  for (const auto& p : pieces_)
    if (p.lo <= y && y < p.hi) return p.count;
  throw std::logic_error("multiplicity pieces do not cover the period");
}

namespace {

// #{k in Z : a <= x + k/d < b}
std::int64_t lattice_hits(const Rational& a, const Rational& b, const Rational& x, const Rational& d) {
  return to_int64(((b - x) * d).ceil() - ((a - x) * d).ceil());
}

}  // namespace

MultiplicityFunction fold_multiplicity(const IntervalUnion& omega, const Rational& d) {
  if (d.sign() <= 0) throw std::invalid_argument("fold period d must be positive, got " + d.to_string());
  const Rational period = Rational(1) / d;
  std::vector<Rational> cuts{Rational(0), period};
  for (const auto& iv : omega.intervals()) {
    cuts.push_back(iv.left.mod(period));
    cuts.push_back(iv.right().mod(period));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<MultiplicityFunction::Piece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    std::int64_t count = 0;
    for (const auto& iv : omega.intervals()) count += lattice_hits(iv.left, iv.right(), mid, d);
    if (!pieces.empty() && pieces.back().count == count) {
      pieces.back().hi = cuts[i + 1];
    } else {
      pieces.push_back({cuts[i], cuts[i + 1], count});
    }
  }
  return MultiplicityFunction(d, std::move(pieces));
}

}  // namespace spectral
