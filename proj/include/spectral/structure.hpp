#pragma once

#include "spectral/domain.hpp"
#include "spectral/point_sets.hpp"
#include "spectral/rational.hpp"

#include <optional>
#include <set>
#include <vector>

namespace spectral {

class PeriodicSet;

// Distinct consecutive differences of a sample, sorted ascending.
struct GapAlphabet {
  std::vector<Rational> gaps;
};

GapAlphabet gap_alphabet(const DiscreteSampleSet& window);

struct WindowEntry {
  BigInt k;                     // window [kL, (k+1)L)
  std::vector<Rational> points;
  std::vector<Rational> word;   // gaps between consecutive points inside the window
  std::optional<Rational> exit_gap;  // gap from the last point to its successor, when sampled
  std::size_t dim{0};           // dim span phi(points)
  bool complete{false};         // window lies inside the sampled range
};

struct WindowProfile {
  Rational window_length;
  std::vector<WindowEntry> windows;
  std::size_t distinct_words{0};   // among complete windows
  BigInt word_bound;               // N_L: words over the gap alphabet with length <= L
  std::size_t max_dim{0};
  std::size_t uniform_dim{0};      // largest s with dim >= s on every complete window
};

WindowProfile window_profile(const IntervalUnion& omega, const DiscreteSampleSet& window, const Rational& length);

// Number of finite words (including the empty word) over `gaps` whose letters sum to at most `length`.
BigInt count_words_up_to(const std::vector<Rational>& gaps, const Rational& length);

// Pigeonhole period candidates: translation distances between complete windows
// carrying identical words, together with their integer fractions, kept when the
// window's basis translates into the window. Sorted ascending, deduplicated.
std::vector<Rational> discover_period(const IntervalUnion& omega, const DiscreteSampleSet& window,
                                      const std::vector<Rational>& lengths);

struct DensityReport {
  Rational window_length;
  std::int64_t n_minus{0};
  std::int64_t n_plus{0};
  Rational density;  // average of count / R over all window positions
};

// Counts over half-open windows [x, x+R) lying inside the sampled range.
DensityReport landau_counts(const DiscreteSampleSet& points, const Rational& length);

struct FiberClass {
  std::vector<Interval> pieces;   // E_j, a union of subintervals of [0, 1/d)
  std::vector<std::int64_t> shifts;  // A_j: x + k/d lies in omega for k in A_j
};

struct FiberDecomposition {
  std::int64_t d{1};
  std::vector<FiberClass> classes;
};

// Theorem-style split of a d-tiling domain: fibers over [0, 1/d) grouped by
// their shift sets. Throws PreconditionError if omega does not d-tile.
FiberDecomposition decompose(const IntervalUnion& omega, std::int64_t d);

// [0, 1/d) + A_j / d
IntervalUnion class_domain(const FiberDecomposition& dec, std::size_t j);
// union over j of E_j + A_j / d
IntervalUnion reconstruct(const FiberDecomposition& dec);
// Partition of [0, 1/d), |A_j| = d, pairwise disjoint pieces.
bool decomposition_invariants_hold(const FiberDecomposition& dec);

// Invariants hold, the classes rebuild omega, and each class domain (translated
// to start at 0) admits `spectrum` as a spectrum.
bool verify_decomposition(const IntervalUnion& omega, const PeriodicSet& spectrum, const FiberDecomposition& dec);

}  // namespace spectral
