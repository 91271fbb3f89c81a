#include "spectral/search.hpp"

#include "spectral/errors.hpp"
#include "spectral/expoly.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace spectral {

namespace {

// 0, 1, -1, 2, -2, ...
std::vector<std::int64_t> shift_order(std::int64_t bound) {
  std::vector<std::int64_t> ks{0};
  for (std::int64_t k = 1; k <= bound; ++k) {
    ks.push_back(k);
    ks.push_back(-k);
  }
  return ks;
}

}  // namespace

SpectrumVerdict verify_spectrum(const IntervalUnion& omega, const PeriodicSet& spectrum, bool paranoid) {
  const ExpPolynomial p = from_domain(omega);
  const auto n = static_cast<std::int64_t>(omega.size());
  const Rational& d = spectrum.period();

  SpectrumVerdict v;
  v.shift_bound = paranoid ? std::max(n, kParanoidShiftBound) : n;
  v.d_integer = d.is_integer();
  v.density_ok = v.d_integer && Rational(static_cast<std::int64_t>(spectrum.size())) == d;
  v.tiles = v.d_integer && verify_tiling(omega, to_int64(d.numerator()));

  const APVerdict ap = check_ap_zeroset(omega, d, v.shift_bound);
  if (!ap.full_ap_in_zeroset) {
    const Rational& o = spectrum.offsets().front();
    v.failing_pair = FailingPair{o, o, ap.failure_witness ? ap.failure_witness->k : 0};
    return v;
  }

  const auto ks = shift_order(v.shift_bound);
  const auto& offs = spectrum.offsets();
  for (std::size_t i = 0; i < offs.size(); ++i) {
    for (std::size_t j = 0; j < offs.size(); ++j) {
      if (i == j) continue;
      const Rational delta = offs[j] - offs[i];
      for (auto k : ks) {
        if (!is_zero_exact(p, delta + d * Rational(k)).is_zero) {
          v.failing_pair = FailingPair{offs[i], offs[j], k};
          return v;
        }
      }
    }
  }
  v.orthogonality_certified = true;
  v.is_spectrum = v.density_ok;
  return v;
}

double parseval_partial_sum(const IntervalUnion& omega, const PeriodicSet& spectrum, const Rational& u,
                            const Rational& v, double truncation) {
  if (!(u < v)) throw std::invalid_argument("Parseval test function needs u < v");
  bool inside = false;
  for (const auto& iv : omega.intervals())
    if (iv.left <= u && v <= iv.right()) inside = true;
  if (!inside) throw PreconditionError("test interval not inside the domain", "[" + u.to_string() + ", " + v.to_string() + ")");

  const long double width = (v - u).to_long_double();
  const long double pi = std::numbers::pi_v<long double>;
  const Rational m(static_cast<std::int64_t>(std::floor(truncation)));
  long double sum = 0;
  for (const auto& lambda : spectrum.sample(-m, m)) {
    if (lambda.is_zero()) {
      sum += width * width;
      continue;
    }
    const long double l = lambda.to_long_double();
    // phase of the width term reduced exactly to keep precision at large lambda
    const long double s = std::sin(pi * (lambda * (v - u)).mod(Rational(2)).to_long_double());
    sum += s * s / (pi * pi * l * l);
  }
  return static_cast<double>(sum);
}

PeriodicSet canonical_translate(const PeriodicSet& s) {
  std::optional<PeriodicSet> best;
  for (const auto& o : s.offsets()) {
    PeriodicSet t = s.translated(-o);
    if (!best || std::lexicographical_compare(t.offsets().begin(), t.offsets().end(), best->offsets().begin(),
                                              best->offsets().end()))
      best = std::move(t);
  }
  return *best;
}

namespace {

struct PeriodOutcome {
  GridInfo info;
  std::vector<PeriodicSet> spectra;
  bool exhausted{false};
};

class CliqueSearch {
 public:
  CliqueSearch(const std::vector<char>& edge, std::size_t target, std::atomic<std::uint64_t>& nodes,
               std::uint64_t budget)
      : edge_(edge), target_(target), nodes_(nodes), budget_(budget) {}

  void run(std::vector<std::int64_t>& clique, const std::vector<std::int64_t>& cand) {
    if (exhausted_) return;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      exhausted_ = true;
      return;
    }
    if (clique.size() == target_) {
      found_.push_back(clique);
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (clique.size() + (cand.size() - i) < target_) break;
      const std::int64_t v = cand[i];
      std::vector<std::int64_t> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (adjacent(v, cand[j])) next.push_back(cand[j]);
      clique.push_back(v);
      run(clique, next);
      clique.pop_back();
      if (exhausted_) return;
    }
  }

  bool adjacent(std::int64_t a, std::int64_t b) const { return edge_[static_cast<std::size_t>(std::abs(a - b))] != 0; }
  std::vector<std::vector<std::int64_t>>& found() { return found_; }
  bool exhausted() const { return exhausted_; }

 private:
  const std::vector<char>& edge_;
  std::size_t target_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
  bool exhausted_{false};
  std::vector<std::vector<std::int64_t>> found_;
};

template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, 0u);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i, w);
    });
  }
}

PeriodOutcome search_period(const IntervalUnion& omega, const ExpPolynomial& p, std::int64_t d,
                            const SearchConfig& cfg, std::atomic<std::uint64_t>& nodes) {
  PeriodOutcome out;
  out.info.d = d;
  out.info.tiles = verify_tiling(omega, d);
  out.info.ap_hypothesis = check_ap_zeroset(omega, Rational(d)).full_ap_in_zeroset;
  const BigInt denom = cfg.denominator > 0 ? BigInt(cfg.denominator) : BigInt(d) * omega.endpoint_denominator_lcm();
  out.info.denominator = denom;
  if (!out.info.tiles || !out.info.ap_hypothesis) return out;

  const BigInt grid_big = denom * d;
  if (grid_big > 1'000'000) throw std::overflow_error("offset grid too large: " + grid_big.str() + " points");
  const auto grid = grid_big.convert_to<std::size_t>();
  const auto n = static_cast<std::int64_t>(omega.size());
  const std::int64_t bound = cfg.paranoid ? std::max(n, kParanoidShiftBound) : n;
  const Rational dd(d);
  const Rational step = Rational(1) / Rational(denom);

  // edge[j]: offsets j/denom apart are orthogonal for all shifts |k| <= bound.
  std::vector<char> edge(grid, 0);
  parallel_for(grid > 0 ? grid - 1 : 0, cfg.workers, [&](std::size_t i, unsigned) {
    const std::size_t j = i + 1;
    const Rational delta = step * Rational(static_cast<std::int64_t>(j));
    bool ok = true;
    for (std::int64_t k = -bound; k <= bound && ok; ++k) ok = is_zero_exact(p, delta + dd * Rational(k)).is_zero;
    edge[j] = ok ? 1 : 0;
  });

  std::vector<std::int64_t> verts;
  for (std::size_t j = 1; j < grid; ++j)
    if (edge[j]) verts.push_back(static_cast<std::int64_t>(j));
  out.info.candidates = verts.size();

  const auto target = static_cast<std::size_t>(d - 1);
  // Drop vertices that cannot sit in a clique of the target size.
  for (bool changed = true; changed && target > 0;) {
    changed = false;
    std::vector<std::int64_t> kept;
    for (auto v : verts) {
      std::size_t deg = 0;
      for (auto u : verts)
        if (u != v && edge[static_cast<std::size_t>(std::abs(u - v))]) ++deg;
      if (deg + 1 >= target) kept.push_back(v);
    }
    changed = kept.size() != verts.size();
    verts = std::move(kept);
  }

  std::vector<std::vector<std::int64_t>> cliques;
  if (target == 0) {
    cliques.push_back({});
  } else {
    std::vector<std::vector<std::vector<std::int64_t>>> per_shard(verts.size());
    std::vector<char> shard_exhausted(verts.size(), 0);
    parallel_for(verts.size(), cfg.workers, [&](std::size_t i, unsigned) {
      CliqueSearch s(edge, target, nodes, cfg.node_budget);
      std::vector<std::int64_t> clique{verts[i]};
      std::vector<std::int64_t> cand;
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (s.adjacent(verts[i], verts[j])) cand.push_back(verts[j]);
      s.run(clique, cand);
      per_shard[i] = std::move(s.found());
      shard_exhausted[i] = s.exhausted() ? 1 : 0;
    });
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (auto& c : per_shard[i]) cliques.push_back(std::move(c));
      if (shard_exhausted[i]) out.exhausted = true;
    }
  }

  for (const auto& c : cliques) {
    std::vector<Rational> offs{Rational(0)};
    for (auto j : c) offs.push_back(step * Rational(j));
    PeriodicSet candidate(dd, std::move(offs));
    if (verify_spectrum(omega, candidate, cfg.paranoid).is_spectrum) out.spectra.push_back(std::move(candidate));
  }
  std::sort(out.spectra.begin(), out.spectra.end(), [](const PeriodicSet& a, const PeriodicSet& b) {
    return std::lexicographical_compare(a.offsets().begin(), a.offsets().end(), b.offsets().begin(), b.offsets().end());
  });
  out.info.found = out.spectra.size();
  return out;
}

}  // namespace

SearchResult search_spectra(const IntervalUnion& omega, const SearchConfig& cfg) {
  if (cfg.d_max < 1) throw std::invalid_argument("d_max must be at least 1");
  if (cfg.denominator < 0) throw std::invalid_argument("offset denominator must be positive");
  const ExpPolynomial p = from_domain(omega);
  std::atomic<std::uint64_t> nodes{0};
  SearchResult res;
  for (std::int64_t d = 1; d <= cfg.d_max; ++d) {
    PeriodOutcome o = search_period(omega, p, d, cfg, nodes);
    res.grids.push_back(o.info);
    for (auto& s : o.spectra) res.spectra.push_back(std::move(s));
    if (o.exhausted) {
      res.budget_exhausted = true;
      break;
    }
  }
  res.nodes = nodes.load();

  std::vector<PeriodicSet> reps;
  for (const auto& s : res.spectra) {
    const PeriodicSet c = canonical_translate(s);
    auto it = std::find(reps.begin(), reps.end(), c);
    res.translation_class.push_back(static_cast<std::size_t>(it - reps.begin()));
    if (it == reps.end()) reps.push_back(c);
  }
  return res;
}

std::vector<CrosscheckRow> fuglede_crosscheck(const IntervalUnion& omega, std::int64_t d_max, const SearchConfig& base) {
  if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
  const ExpPolynomial p = from_domain(omega);
  std::vector<CrosscheckRow> rows;
  for (std::int64_t d = 1; d <= d_max; ++d) {
    std::atomic<std::uint64_t> nodes{0};
    SearchConfig cfg = base;
    cfg.d_max = d;
    const PeriodOutcome o = search_period(omega, p, d, cfg, nodes);
    bool minimal = false;
    for (const auto& s : o.spectra)
      if (s.minimal_period() == Rational(d)) minimal = true;
    rows.push_back({d, o.info.tiles, o.info.ap_hypothesis, o.spectra.size(), minimal, o.info.denominator, o.exhausted});
  }
  return rows;
}

}  // namespace spectral
