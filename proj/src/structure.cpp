#include "spectral/structure.hpp"

#include "spectral/embedding.hpp"
#include "spectral/errors.hpp"
#include "spectral/newton_ap.hpp"
#include "spectral/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spectral {

GapAlphabet gap_alphabet(const DiscreteSampleSet& window) {
  if (window.size() < 2) throw std::invalid_argument("gap alphabet needs at least two points");
  std::vector<Rational> gaps;
  for (std::size_t i = 1; i < window.size(); ++i) gaps.push_back(window[i] - window[i - 1]);
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  return {std::move(gaps)};
}

BigInt count_words_up_to(const std::vector<Rational>& gaps, const Rational& length) {
  if (length.sign() < 0) return 0;
  BigInt den = length.denominator();
  for (const auto& g : gaps) {
    if (g.sign() <= 0) throw std::invalid_argument("word letters must be positive");
    den = lcm(den, g.denominator());
  }
  const BigInt budget_big = (length * Rational(den)).floor();
  if (budget_big > 10'000'000) throw std::overflow_error("word-count budget too large");
  const auto budget = budget_big.convert_to<std::size_t>();
  std::vector<std::size_t> weights;
  for (const auto& g : gaps) weights.push_back((g * Rational(den)).numerator().convert_to<std::size_t>());

  std::vector<BigInt> exact(budget + 1);
  exact[0] = 1;
  BigInt total = 1;
  for (std::size_t s = 1; s <= budget; ++s) {
    for (auto w : weights)
      if (w <= s) exact[s] += exact[s - w];
    total += exact[s];
  }
  return total;
}

namespace {

struct WordKey {
  std::size_t count;
  std::vector<Rational> gaps;
  friend auto operator<=>(const WordKey&, const WordKey&) = default;
};

}  // namespace

WindowProfile window_profile(const IntervalUnion& omega, const DiscreteSampleSet& window, const Rational& length) {
  if (length.sign() <= 0) throw std::invalid_argument("window length must be positive");
  require_normalized(omega, "window_profile");
  WindowProfile prof;
  prof.window_length = length;
  if (window.empty()) return prof;

  const BigInt k_lo = (window.front() / length).floor();
  const BigInt k_hi = (window.back() / length).floor();
  std::set<WordKey> words;
  bool any_complete = false;
  prof.uniform_dim = 0;
  std::size_t min_complete_dim = SIZE_MAX;
  for (BigInt k = k_lo; k <= k_hi; ++k) {
    WindowEntry e;
    e.k = k;
    const Rational lo = length * Rational(k);
    const Rational hi = lo + length;
    e.points = window.in_half_open(lo, hi);
    for (std::size_t i = 1; i < e.points.size(); ++i) e.word.push_back(e.points[i] - e.points[i - 1]);
    if (!e.points.empty()) {
      auto it = std::upper_bound(window.begin(), window.end(), e.points.back());
      if (it != window.end()) e.exit_gap = *it - e.points.back();
    }
    e.complete = window.front() <= lo && hi <= window.back();
    e.dim = e.points.empty() ? 0 : rank_span(omega, DiscreteSampleSet(e.points)).rank;
    prof.max_dim = std::max(prof.max_dim, e.dim);
    if (e.complete) {
      any_complete = true;
      min_complete_dim = std::min(min_complete_dim, e.dim);
      words.insert({e.points.size(), e.word});
    }
    prof.windows.push_back(std::move(e));
  }
  prof.distinct_words = words.size();
  prof.uniform_dim = any_complete ? min_complete_dim : 0;
  prof.word_bound = window.size() >= 2 ? count_words_up_to(gap_alphabet(window).gaps, length) : BigInt(1);
  return prof;
}

std::vector<Rational> discover_period(const IntervalUnion& omega, const DiscreteSampleSet& window,
                                      const std::vector<Rational>& lengths) {
  require_normalized(omega, "discover_period");
  if (lengths.empty()) throw std::invalid_argument("discover_period needs at least one window length");
  if (window.size() < 2) throw PreconditionError("window too short", "fewer than two points");
  const SpanBasis basis = rank_span(omega, window);
  const Rational min_gap = gap_alphabet(window).gaps.front();

  std::set<Rational> found;
  for (const auto& length : lengths) {
    if (length.sign() <= 0) throw std::invalid_argument("window length must be positive");
    const BigInt k_lo = (window.front() / length).floor();
    const BigInt k_hi = (window.back() / length).floor();
    // Complete windows keyed by word; each key keeps its first points in order.
    std::map<WordKey, std::vector<Rational>> firsts;
    std::size_t complete = 0;
    for (BigInt k = k_lo; k <= k_hi; ++k) {
      const Rational lo = length * Rational(k);
      const Rational hi = lo + length;
      if (!(window.front() <= lo && hi <= window.back())) continue;
      ++complete;
      const auto pts = window.in_half_open(lo, hi);
      if (pts.empty()) continue;
      WordKey key{pts.size(), {}};
      for (std::size_t i = 1; i < pts.size(); ++i) key.gaps.push_back(pts[i] - pts[i - 1]);
      firsts[key].push_back(pts.front());
    }
    if (complete < 2)
      throw PreconditionError("window too short", "fewer than two complete windows of length " + length.to_string());

    std::set<Rational> raw;
    for (const auto& [key, starts] : firsts)
      for (std::size_t i = 0; i < starts.size(); ++i)
        for (std::size_t j = i + 1; j < starts.size(); ++j) raw.insert(starts[j] - starts[i]);

    for (const auto& d : raw) {
      const BigInt max_div = (d / min_gap).floor();
      for (BigInt j = 1; j <= max_div; ++j) {
        const Rational cand = d / Rational(j);
        if (found.contains(cand)) continue;
        if (basis_translate_period(omega, window, basis, cand)) found.insert(cand);
      }
    }
  }
  return {found.begin(), found.end()};
}

DensityReport landau_counts(const DiscreteSampleSet& points, const Rational& length) {
  if (length.sign() <= 0) throw std::invalid_argument("density window length must be positive");
  if (points.size() < 2) throw PreconditionError("density needs at least two points");
  const Rational lo = points.front();
  const Rational hi_start = points.back() - length;
  if (hi_start < lo)
    throw PreconditionError("window length exceeds sample span",
                            "R=" + length.to_string() + " span=" + (points.back() - lo).to_string());

  std::vector<Rational> cuts{lo, hi_start};
  for (const auto& p : points) {
    for (const Rational& c : {p, p - length})
      if (lo <= c && c <= hi_start) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto count = [&](const Rational& x) {
    return static_cast<std::int64_t>(points.in_half_open(x, x + length).size());
  };
  DensityReport rep;
  rep.window_length = length;
  rep.n_minus = rep.n_plus = count(cuts.front());
  Rational weighted;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const std::int64_t c = count(cuts[i]);
    rep.n_minus = std::min(rep.n_minus, c);
    rep.n_plus = std::max(rep.n_plus, c);
    if (i + 1 < cuts.size()) {
      const std::int64_t m = count((cuts[i] + cuts[i + 1]) / 2);
      rep.n_minus = std::min(rep.n_minus, m);
      rep.n_plus = std::max(rep.n_plus, m);
      weighted += Rational(m) * (cuts[i + 1] - cuts[i]);
    }
  }
  const Rational spread = hi_start - lo;
  rep.density = spread.is_zero() ? Rational(count(lo)) / length : weighted / spread / length;
  return rep;
}

FiberDecomposition decompose(const IntervalUnion& omega, std::int64_t d) {
  if (!verify_tiling(omega, d))
    throw PreconditionError("domain does not " + std::to_string(d) + "-tile", "fold modulo 1/" + std::to_string(d));
  const Rational dd(d);
  const Rational period = Rational(1) / dd;
  std::vector<Rational> cuts{Rational(0), period};
  for (const auto& iv : omega.intervals()) {
    cuts.push_back(iv.left.mod(period));
    cuts.push_back(iv.right().mod(period));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  FiberDecomposition dec;
  dec.d = d;
  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational x = (cuts[i] + cuts[i + 1]) / 2;
    std::vector<std::int64_t> shifts;
    for (const auto& iv : omega.intervals()) {
      const BigInt first = ((iv.left - x) * dd).ceil();
      const BigInt stop = ((iv.right() - x) * dd).ceil();
      for (BigInt k = first; k < stop; ++k) shifts.push_back(to_int64(k));
    }
    std::sort(shifts.begin(), shifts.end());
    auto [it, inserted] = index.emplace(shifts, dec.classes.size());
    if (inserted) dec.classes.push_back({{}, shifts});
    auto& pieces = dec.classes[it->second].pieces;
    if (!pieces.empty() && pieces.back().right() == cuts[i]) {
      pieces.back().length += cuts[i + 1] - cuts[i];
    } else {
      pieces.push_back({cuts[i], cuts[i + 1] - cuts[i]});
    }
  }
  return dec;
}

IntervalUnion class_domain(const FiberDecomposition& dec, std::size_t j) {
  const Rational period = Rational(1) / Rational(dec.d);
  std::vector<Interval> pieces;
  for (auto k : dec.classes.at(j).shifts) pieces.push_back({Rational(k) * period, period});
  return IntervalUnion::create(std::move(pieces));
}

IntervalUnion reconstruct(const FiberDecomposition& dec) {
  const Rational period = Rational(1) / Rational(dec.d);
  std::vector<Interval> pieces;
  for (const auto& c : dec.classes)
    for (const auto& e : c.pieces)
      for (auto k : c.shifts) pieces.push_back({e.left + Rational(k) * period, e.length});
  return IntervalUnion::create(std::move(pieces));
}

bool decomposition_invariants_hold(const FiberDecomposition& dec) {
  if (dec.d < 1 || dec.classes.empty()) return false;
  std::vector<Interval> all;
  for (const auto& c : dec.classes) {
    if (static_cast<std::int64_t>(c.shifts.size()) != dec.d) return false;
    if (std::adjacent_find(c.shifts.begin(), c.shifts.end()) != c.shifts.end()) return false;
    for (const auto& e : c.pieces) {
      if (e.length.sign() <= 0) return false;
      all.push_back(e);
    }
  }
  std::sort(all.begin(), all.end(), [](const Interval& a, const Interval& b) { return a.left < b.left; });
  Rational cursor(0);
  for (const auto& e : all) {
    if (e.left != cursor) return false;
    cursor = e.right();
  }
  return cursor == Rational(1) / Rational(dec.d);
}

bool verify_decomposition(const IntervalUnion& omega, const PeriodicSet& spectrum, const FiberDecomposition& dec) {
  if (!decomposition_invariants_hold(dec)) return false;
  try {
    if (!(reconstruct(dec) == omega)) return false;
  } catch (const std::invalid_argument&) {
    return false;  // overlapping pieces
  }
  for (std::size_t j = 0; j < dec.classes.size(); ++j) {
    const IntervalUnion dom = class_domain(dec, j);
    // Translating the domain leaves its spectra unchanged.
    const IntervalUnion at_zero = dom.translated(-dom.leftmost());
    if (!verify_spectrum(at_zero, spectrum).is_spectrum) return false;
  }
  return true;
}

}  // namespace spectral
