#include "doctest.h"
#include "support.hpp"

#include "spectral/embedding.hpp"
#include "spectral/errors.hpp"
#include "spectral/search.hpp"

using namespace spectral;
using namespace testsupport;

namespace {

std::complex<double> c(double re, double im = 0) { return {re, im}; }

bool near(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-12) return false;
  return true;
}

DiscreteSampleSet pts(std::initializer_list<const char*> v) {
  std::vector<Rational> out;
  for (const char* s : v) out.push_back(q(s));
  return DiscreteSampleSet::from_unsorted(std::move(out));
}

}  // namespace

TEST_CASE("phi golden values") {
  const auto a0 = phi(omega_a(), Rational(0));
  CHECK(near(a0.first, {c(1)}));
  CHECK(near(a0.second, {c(1)}));
  const auto ah = phi(omega_a(), q("1/2"));
  CHECK(near(ah.first, {c(-1)}));
  CHECK(near(ah.second, {c(1)}));
  const auto c0 = phi(omega_c(), Rational(0));
  CHECK(near(c0.first, {c(1), c(1), c(1)}));
  CHECK(near(c0.second, {c(1), c(1), c(1)}));
  const auto bh = phi(omega_b(), q("1/2"));
  CHECK(near(bh.first, {c(0, 1), c(0, -1)}));
  CHECK(near(bh.second, {c(1), c(-1)}));
}

TEST_CASE("phi lands on the torus and every image is null") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const Rational x = random_rational(rng, 30, 10);
    const auto v = phi(omega_e(), x);
    for (const auto& z : v.first) CHECK(std::abs(std::abs(z) - 1) < 1e-12);
    for (const auto& z : v.second) CHECK(std::abs(std::abs(z) - 1) < 1e-12);
    CHECK(std::abs(null_form(v, v)) < 1e-12);
    CHECK(null_form_is_zero(v, v));
  }
}

TEST_CASE("null form golden values") {
  CHECK(std::abs(null_form(phi(omega_a(), Rational(0)), phi(omega_a(), q("1/2"))) - c(-2)) < 1e-12);
  CHECK(null_form_is_zero(phi(omega_c(), q("1/3")), phi(omega_c(), Rational(0))));
  CHECK_FALSE(null_form_is_zero(phi(omega_c(), Rational(1)), phi(omega_c(), Rational(0))));
}

TEST_CASE("null form equals P at the difference") {
  std::mt19937_64 rng(99);
  for (const auto& omega : {omega_a(), omega_b(), omega_c(), omega_e()}) {
    const auto p = from_domain(omega);
    for (int i = 0; i < 250; ++i) {
      const Rational x = random_rational(rng, 20, 10), y = random_rational(rng, 20, 10);
      const auto v = phi(omega, x), w = phi(omega, y);
      CHECK(std::abs(null_form(v, w) - eval_numeric(p, x - y)) <= 1e-10);
      CHECK(null_form_is_zero(v, w) == hp_is_zero(omega, x - y));
    }
  }
}

TEST_CASE("rank golden values") {
  const auto ra = rank_span(omega_a(), pts({"0", "1", "2", "3"}));
  CHECK(ra.rank == 1);
  CHECK(ra.base_points == std::vector<Rational>{Rational(0)});
  CHECK(ra.method == ZeroMethod::exact);

  const auto rc = rank_span(omega_c(), pts({"0", "1/3", "2/3"}));
  CHECK(rc.rank == 3);
  CHECK(rc.base_points == std::vector<Rational>{q("0"), q("1/3"), q("2/3")});

  CHECK(rank_span(omega_b(), pts({"0", "1/2"})).rank == 2);
}

TEST_CASE("exact rank matches numeric SVD rank") {
  std::mt19937_64 rng(12);
  for (const auto& omega : {omega_b(), omega_c(), omega_e()}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Rational> v;
      std::vector<double> d;
      std::uniform_int_distribution<int> count(1, 6);
      for (int i = count(rng); i > 0; --i) v.push_back(random_rational(rng, 6, 4));
      std::sort(v.begin(), v.end());
      std::vector<Rational> uniq = v;
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      const DiscreteSampleSet set(uniq);
      for (const auto& x : set) d.push_back(x.to_double());
      const auto exact = rank_span(omega, set);
      const auto numeric = rank_span_numeric(omega, d);
      CHECK(exact.rank == numeric.rank);
      CHECK(numeric.method == ZeroMethod::numeric);
      CHECK(exact.rank <= 2 * omega.size());
    }
  }
}

TEST_CASE("rank never exceeds n on subsets of verified spectra") {
  std::mt19937_64 rng(4);
  struct Case {
    IntervalUnion omega;
    PeriodicSet spectrum;
  };
  for (const auto& c : {Case{omega_a(), lattice_z()}, Case{omega_b(), lambda_b()}, Case{omega_c(), lambda_c()}}) {
    const auto w = c.spectrum.sample(Rational(-9), Rational(21));
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Rational> sub;
      for (const auto& x : w)
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) sub.push_back(x);
      if (sub.empty()) continue;
      const auto r = rank_span(c.omega, DiscreteSampleSet(sub));
      CHECK(r.rank <= c.omega.size());
    }
    CHECK(rank_span(c.omega, w).rank == c.omega.size());
  }
}

TEST_CASE("membership by difference checks") {
  const SpanBasis ba = rank_span(omega_a(), pts({"0"}));
  CHECK(membership_test(omega_a(), ba, Rational(7)));
  CHECK_FALSE(membership_test(omega_a(), ba, q("1/2")));

  const SpanBasis bc = rank_span(omega_c(), pts({"0", "1/3", "2/3"}));
  CHECK(membership_test(omega_c(), bc, Rational(3)));
  CHECK_FALSE(membership_test(omega_c(), bc, Rational(1)));

  const auto w = lambda_c().sample(Rational(0), Rational(15));
  for (const auto& x : w) CHECK(membership_test(omega_c(), bc, x));
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Rational mid = (w[i] + w[i + 1]) / Rational(2);
    CHECK_FALSE(membership_test(omega_c(), bc, mid));
  }
}

TEST_CASE("basis translates") {
  const auto wc = lambda_c().sample(Rational(0), Rational(7));
  const auto bc = rank_span(omega_c(), pts({"0", "1/3", "2/3"}));
  CHECK(basis_translate_period(omega_c(), wc, bc, Rational(3)));
  CHECK_FALSE(basis_translate_period(omega_c(), wc, bc, q("1/3")));

  const auto wa = lattice_z().sample(Rational(0), Rational(5));
  CHECK(basis_translate_period(omega_a(), wa, rank_span(omega_a(), pts({"0"})), Rational(1)));
}

TEST_CASE("periodic extension golden cases") {
  const auto gc = lambda_c().sample(Rational(0), Rational(7));
  const auto ec = periodic_extension(omega_c(), gc, rank_span(omega_c(), pts({"0", "1/3", "2/3"})), Rational(3));
  CHECK(ec.set == lambda_c());
  CHECK(ec.certificate.orthogonal);
  CHECK(ec.certificate.ap_hypothesis);
  CHECK_FALSE(ec.certificate.failure.has_value());

  const auto ea = periodic_extension(omega_a(), pts({"0", "1", "2"}), rank_span(omega_a(), pts({"0"})), Rational(1));
  CHECK(ea.set == lattice_z());
  CHECK(ea.certificate.orthogonal);

  const auto gb = pts({"0", "1/2", "2", "5/2"});
  const auto eb = periodic_extension(omega_b(), gb, rank_span(omega_b(), pts({"0", "1/2"})), Rational(2));
  CHECK(eb.set == lambda_b());
  CHECK(eb.certificate.orthogonal);
}

TEST_CASE("periodic extension rejects families that are not mutually null") {
  const auto g = pts({"0", "1", "3"});
  CHECK_THROWS_AS(periodic_extension(omega_c(), g, rank_span(omega_c(), pts({"0", "1"})), Rational(3)), PreconditionError);
}

TEST_CASE("periodic extension of a spectrum window reproduces the spectrum") {
  struct Case {
    IntervalUnion omega;
    PeriodicSet spectrum;
  };
  for (const auto& c : {Case{omega_a(), lattice_z()}, Case{omega_b(), lambda_b()}, Case{omega_c(), lambda_c()}}) {
    const auto w = c.spectrum.sample(Rational(0), Rational(3) * c.spectrum.period());
    const auto basis = rank_span(c.omega, w);
    const auto ext = periodic_extension(c.omega, w, basis, c.spectrum.period());
    CHECK(ext.set == c.spectrum);
    CHECK(ext.certificate.orthogonal);
    CHECK(verify_spectrum(c.omega, ext.set).is_spectrum);
  }
}
