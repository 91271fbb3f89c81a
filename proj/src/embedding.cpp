#include "spectral/embedding.hpp"

#include "spectral/cyclotomic.hpp"
#include "spectral/errors.hpp"
#include "spectral/newton_ap.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spectral {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Row = std::vector<CyclotomicElement>;

void remove_row_content(Row& row) {
  BigInt g = 0;
  for (auto& e : row) {
    e = normalize_element(e);
    for (const auto& c : e.coeffs()) g = gcd(g, c);
  }
  if (g <= 1) return;
  for (auto& e : row) e = e / to_int64(g);
}

bool row_is_zero(const Row& row) {
  for (const auto& e : row)
    if (!e.is_zero()) return false;
  return true;
}

bool mutually_null(const ExpPolynomial& p, const std::vector<Rational>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (!is_zero_exact(p, pts[j] - pts[i]).is_zero) return false;
  return true;
}

}  // namespace

PhiVector phi(const IntervalUnion& omega, const Rational& x) {
  require_normalized(omega, "phi");
  PhiVector v;
  v.base_point = x;
  for (const auto& iv : omega.intervals()) {
    v.first_phase.push_back((iv.right() * x).frac());
    v.second_phase.push_back((iv.left * x).frac());
    v.first.push_back(std::polar(1.0, kTwoPi * v.first_phase.back().to_double()));
    v.second.push_back(std::polar(1.0, kTwoPi * v.second_phase.back().to_double()));
  }
  return v;
}

std::complex<double> null_form(const PhiVector& v, const PhiVector& w) {
  if (v.dim() != w.dim() || v.second.size() != w.second.size())
    throw std::invalid_argument("null_form of vectors with different dimensions");
  std::complex<double> s = 0;
  for (std::size_t j = 0; j < v.dim(); ++j) s += v.first[j] * std::conj(w.first[j]);
  for (std::size_t j = 0; j < v.second.size(); ++j) s -= v.second[j] * std::conj(w.second[j]);
  return s;
}

bool null_form_is_zero(const PhiVector& v, const PhiVector& w) {
  if (v.first_phase.size() != w.first_phase.size() || v.second_phase.size() != w.second_phase.size())
    throw std::invalid_argument("null_form of vectors with different dimensions");
  std::vector<RootOfUnityTerm> terms;
  for (std::size_t j = 0; j < v.first_phase.size(); ++j)
    terms.emplace_back(1, v.first_phase[j] - w.first_phase[j]);
  for (std::size_t j = 0; j < v.second_phase.size(); ++j)
    terms.emplace_back(-1, v.second_phase[j] - w.second_phase[j]);
  return sum_is_zero(terms);
}

SpanBasis rank_span(const IntervalUnion& omega, const DiscreteSampleSet& points) {
  require_normalized(omega, "rank_span");
  SpanBasis basis;
  basis.method = ZeroMethod::exact;
  if (points.empty()) return basis;

  std::vector<PhiVector> vecs;
  std::vector<RootOfUnityTerm> all;
  for (const auto& x : points) {
    vecs.push_back(phi(omega, x));
    for (const auto& e : vecs.back().first_phase) all.emplace_back(1, e);
    for (const auto& e : vecs.back().second_phase) all.emplace_back(1, e);
  }
  const std::uint64_t order = common_order(all);
  auto root_of = [order](const Rational& e) {
    return CyclotomicElement::root(order, (e.numerator() * (BigInt(order) / e.denominator())).convert_to<std::uint64_t>());
  };

  // Echelon rows with their pivot columns, in insertion order.
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    Row v;
    for (const auto& e : vecs[i].first_phase) v.push_back(root_of(e));
    for (const auto& e : vecs[i].second_phase) v.push_back(root_of(e));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::size_t c = pivots[r];
      if (v[c].is_zero()) continue;
      const CyclotomicElement lead = v[c];
      const CyclotomicElement piv = rows[r][c];
      for (std::size_t col = 0; col < v.size(); ++col) v[col] = piv * v[col] - lead * rows[r][col];
      remove_row_content(v);
    }
    if (row_is_zero(v)) continue;
    std::size_t c = 0;
    while (v[c].is_zero()) ++c;
    rows.push_back(std::move(v));
    pivots.push_back(c);
    basis.base_points.push_back(points[i]);
  }
  basis.rank = rows.size();

  if (basis.rank > omega.size() && mutually_null(ExpPolynomial::from_intervals(omega), points.points()))
    throw std::logic_error("span of a mutually null family exceeds dimension n");
  return basis;
}

SpanBasis rank_span_numeric(const IntervalUnion& omega, std::span<const double> points, double threshold) {
  require_normalized(omega, "rank_span_numeric");
  const std::size_t n = omega.size();
  SpanBasis basis;
  basis.method = ZeroMethod::numeric;
  Eigen::MatrixXcd kept(0, static_cast<Eigen::Index>(2 * n));
  for (double x : points) {
    Eigen::RowVectorXcd row(static_cast<Eigen::Index>(2 * n));
    for (std::size_t j = 0; j < n; ++j) {
      const auto& iv = omega[j];
      row(static_cast<Eigen::Index>(j)) = std::polar(1.0, kTwoPi * iv.right().to_double() * x);
      row(static_cast<Eigen::Index>(n + j)) = std::polar(1.0, kTwoPi * iv.left.to_double() * x);
    }
    Eigen::MatrixXcd trial(kept.rows() + 1, kept.cols());
    trial << kept, row;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(trial);
    const auto& sv = svd.singularValues();
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > threshold) ++r;
    if (r > static_cast<std::size_t>(kept.rows())) {
      kept = std::move(trial);
      basis.numeric_points.push_back(x);
    }
  }
  basis.rank = static_cast<std::size_t>(kept.rows());
  return basis;
}

bool membership_test(const IntervalUnion& omega, const SpanBasis& basis, const Rational& x) {
  if (basis.method != ZeroMethod::exact) throw std::invalid_argument("membership_test needs an exact basis");
  const ExpPolynomial p = from_domain(omega);
  for (const auto& y : basis.base_points)
    if (!is_zero_exact(p, x - y).is_zero) return false;
  return true;
}

bool basis_translate_period(const IntervalUnion& omega, const DiscreteSampleSet& window,
                            const SpanBasis& basis, const Rational& d) {
  require_normalized(omega, "basis_translate_period");
  for (const auto& y : basis.base_points)
    if (!window.contains(y)) throw PreconditionError("basis point outside the window", y.to_string());
  for (const auto& y : basis.base_points)
    if (!window.contains(y + d)) return false;
  return true;
}

PeriodicExtension periodic_extension(const IntervalUnion& omega, const DiscreteSampleSet& gamma,
                                     const SpanBasis& basis, const Rational& d) {
  if (d.sign() <= 0) throw std::invalid_argument("extension period must be positive");
  const ExpPolynomial p = from_domain(omega);
  const auto& pts = gamma.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (!is_zero_exact(p, pts[j] - pts[i]).is_zero)
        throw PreconditionError("family is not mutually null",
                                "(" + pts[i].to_string() + ", " + pts[j].to_string() + ")");
  for (const auto& y : basis.base_points) {
    if (!gamma.contains(y)) throw PreconditionError("basis point not in the family", y.to_string());
    if (!gamma.contains(y + d))
      throw PreconditionError("translated basis point not in the family", (y + d).to_string());
  }
  const std::size_t family_rank = rank_span(omega, gamma).rank;
  const std::size_t basis_rank = rank_span(omega, DiscreteSampleSet::from_unsorted(basis.base_points)).rank;
  if (basis_rank != basis.base_points.size() || basis_rank != family_rank)
    throw PreconditionError("basis does not span the family",
                            "basis rank " + std::to_string(basis_rank) + ", family rank " +
                                std::to_string(family_rank));

  PeriodicExtension out{PeriodicSet::from_points(d, pts), {}};
  ExtensionCertificate& cert = out.certificate;
  const auto n = static_cast<std::int64_t>(omega.size());
  cert.shift_bound = n;

  const APVerdict ap = check_ap_zeroset(omega, d);
  cert.ap_hypothesis = ap.hypothesis_holds;
  if (!ap.full_ap_in_zeroset) {
    cert.failure = "step " + d.to_string() + " fails the progression test at " +
                   (ap.failure_witness ? ap.failure_witness->value.to_string() : std::string("?"));
    return out;
  }
  const auto& offs = out.set.offsets();
  for (std::size_t i = 0; i < offs.size(); ++i) {
    for (std::size_t j = 0; j < offs.size(); ++j) {
      if (i == j) continue;
      ++cert.pairs_checked;
      for (std::int64_t k = -n; k <= n; ++k) {
        const Rational xi = offs[j] - offs[i] + d * Rational(k);
        if (!is_zero_exact(p, xi).is_zero) {
          cert.failure = "offsets " + offs[i].to_string() + ", " + offs[j].to_string() + " at k=" +
                         std::to_string(k);
          return out;
        }
      }
    }
  }
  cert.orthogonal = true;
  return out;
}

}  // namespace spectral
