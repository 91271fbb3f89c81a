#pragma once

#include "spectral/domain.hpp"
#include "spectral/newton_ap.hpp"
#include "spectral/point_sets.hpp"
#include "spectral/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace spectral {

// lambda_j - lambda_i + k * d fell outside the zero set.
struct FailingPair {
  Rational lambda_i;
  Rational lambda_j;
  std::int64_t k;
};

struct SpectrumVerdict {
  bool is_spectrum{false};
  bool orthogonality_certified{false};
  bool density_ok{false};
  bool d_integer{false};
  bool tiles{false};
  std::optional<FailingPair> failing_pair;
  std::int64_t shift_bound{0};
};

inline constexpr std::int64_t kParanoidShiftBound = 50;

// Exact certificate for a periodic candidate: density one, the progression
// test on the period, and every offset difference shifted by k*d (|k| <= n, or
// 50 in paranoid mode) inside the zero set.
SpectrumVerdict verify_spectrum(const IntervalUnion& omega, const PeriodicSet& spectrum, bool paranoid = false);

// sum over spectrum points with |lambda| <= truncation of |<chi_[u,v), e_lambda>|^2.
// Approaches v - u for a genuine spectrum. [u, v) must lie inside one interval of omega.
double parseval_partial_sum(const IntervalUnion& omega, const PeriodicSet& spectrum, const Rational& u,
                            const Rational& v, double truncation);

struct SearchConfig {
  std::int64_t d_max{1};
  std::int64_t denominator{0};  // 0: d * (lcm of the endpoint denominators)
  std::uint64_t node_budget{5'000'000};
  unsigned workers{1};
  bool paranoid{false};
};

struct GridInfo {
  std::int64_t d;
  bool tiles;
  bool ap_hypothesis;
  BigInt denominator;     // offsets searched: j / denominator in [0, d)
  std::size_t candidates{0};  // grid offsets orthogonal to 0
  std::size_t found{0};
};

struct SearchResult {
  std::vector<PeriodicSet> spectra;         // each contains 0; sorted by (period, offsets)
  std::vector<std::size_t> translation_class;  // equal ids: translates of one another
  std::vector<GridInfo> grids;
  bool budget_exhausted{false};
  std::uint64_t nodes{0};
};

SearchResult search_spectra(const IntervalUnion& omega, const SearchConfig& cfg);

// Lexicographically least translate of the set that contains 0.
PeriodicSet canonical_translate(const PeriodicSet& s);

struct CrosscheckRow {
  std::int64_t d;
  bool tiles;
  bool ap_hypothesis;
  std::size_t spectra_found;
  bool minimal_period_spectrum;  // some found spectrum has minimal period exactly d
  BigInt grid_denominator;
  bool budget_exhausted;
};

std::vector<CrosscheckRow> fuglede_crosscheck(const IntervalUnion& omega, std::int64_t d_max,
                                              const SearchConfig& base = {});

}  // namespace spectral
