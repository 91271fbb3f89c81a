#include "doctest.h"
#include "support.hpp"

#include "spectral/errors.hpp"
#include "spectral/expoly.hpp"

#include <numbers>
#include <sstream>

using namespace spectral;
using namespace testsupport;

namespace {

using Terms = std::vector<ExpPolynomial::Term>;

Terms sorted_terms(const ExpPolynomial& p) {
  Terms t = p.terms();
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.frequency < b.frequency; });
  return t;
}

bool near_list(const std::vector<double>& got, const std::vector<double>& want, double eps) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (std::abs(got[i] - want[i]) > eps) return false;
  return true;
}

}  // namespace

TEST_CASE("transcription of interval endpoints") {
  CHECK(sorted_terms(from_domain(omega_a())) == Terms{{-1, q("0")}, {1, q("1")}});
  CHECK(sorted_terms(from_domain(omega_c())) ==
        Terms{{-1, q("0")}, {1, q("1/3")}, {-1, q("1")}, {1, q("4/3")}, {-1, q("2")}, {1, q("7/3")}});
  CHECK(sorted_terms(from_domain(omega_b())) == Terms{{-1, q("0")}, {1, q("1/2")}, {-1, q("1")}, {1, q("3/2")}});
  CHECK_THROWS_AS(from_domain(dom({{"0", "2"}})), PreconditionError);
}

TEST_CASE("coefficients sum to zero") {
  for (const auto& omega : {omega_a(), omega_b(), omega_c(), omega_e()}) {
    std::int64_t s = 0;
    const auto p = from_domain(omega);
    for (const auto& t : p.terms()) s += t.coefficient;
    CHECK(s == 0);
    CHECK(std::abs(eval_numeric(from_domain(omega), 0.0)) < 1e-15);
    CHECK(std::abs(eval_chi_hat(omega, 0.0) - 1.0) < 1e-15);
  }
}

TEST_CASE("numeric evaluation golden values") {
  const auto pa = from_domain(omega_a());
  CHECK(std::abs(eval_numeric(pa, 0.5) - std::complex<double>(-2, 0)) < 1e-12);
  CHECK(std::abs(eval_numeric(pa, 3.0)) < 1e-12);
  CHECK(std::abs(eval_numeric(from_domain(omega_b()), 0.5)) < 1e-12);

  const auto chi = eval_chi_hat(omega_a(), 0.5);
  CHECK(std::abs(chi - std::complex<double>(0, 2 / std::numbers::pi)) < 1e-12);
  CHECK(std::abs(std::abs(chi) - 0.6366197723675814) < 1e-12);
  CHECK(std::abs(eval_chi_hat(omega_a(), 4.0)) < 1e-12);
}

TEST_CASE("exact zero verdicts golden values") {
  const auto pc = from_domain(omega_c());
  CHECK(is_zero_exact(pc, q("1/3")).is_zero);
  CHECK_FALSE(is_zero_exact(pc, Rational(1)).is_zero);
  CHECK(is_zero_exact(from_domain(omega_a()), Rational(5)).is_zero);
  CHECK(is_zero_exact(pc, Rational(0)).is_zero);
  CHECK(is_zero_exact(pc, q("1/3")).method == ZeroMethod::exact);

  const auto v = is_zero_numeric(pc, 1.0, 1e-9);
  CHECK_FALSE(v.is_zero);
  CHECK(v.method == ZeroMethod::numeric);
  REQUIRE(v.witness.has_value());
  CHECK(std::abs(*v.witness - 3 * std::sqrt(3.0)) < 1e-9);
}

TEST_CASE("exact zero test matches the factorization oracle") {
  std::mt19937_64 rng(3);
  const auto pa = from_domain(omega_a()), pb = from_domain(omega_b()), pc = from_domain(omega_c());
  for (int i = 0; i < 1500; ++i) {
    const Rational x = random_rational(rng, 12, 6);
    CHECK(is_zero_exact(pa, x).is_zero == (x.is_zero() || zero_a(x)));
    CHECK(is_zero_exact(pb, x).is_zero == (x.is_zero() || zero_b(x)));
    CHECK(is_zero_exact(pc, x).is_zero == (x.is_zero() || zero_c(x)));
  }
}

TEST_CASE("exact zero test matches high-precision evaluation on random domains") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 120; ++i) {
    const auto sample = random_d_tiler(rng, 6, 4);
    const auto p = from_domain(sample.omega);
    for (int j = 0; j < 20; ++j) {
      const Rational x = random_rational(rng, 12, 8);
      CHECK(is_zero_exact(p, x).is_zero == hp_is_zero(sample.omega, x));
    }
  }
}

TEST_CASE("conjugate symmetry") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-20, 20);
  for (const auto& omega : {omega_b(), omega_c(), omega_e()}) {
    const auto p = from_domain(omega);
    for (int i = 0; i < 200; ++i) {
      const double x = u(rng);
      CHECK(std::abs(eval_numeric(p, -x) - std::conj(eval_numeric(p, x))) < 1e-11);
    }
  }
}

TEST_CASE("rational evaluation reduces phases exactly") {
  const auto pc = from_domain(omega_c());
  const Rational big = Rational(3000000) + q("1/3");
  CHECK(std::abs(eval_numeric(pc, big)) < 1e-12);
  CHECK(std::abs(eval_numeric(pc, q("7/5")) - eval_numeric(pc, 1.4)) < 1e-12);
}

TEST_CASE("zero scan golden ranges") {
  CHECK(near_list(scan_zeros_numeric(from_domain(omega_a()), -2.5, 2.5, 1e-9), {-2, -1, 0, 1, 2}, 1e-7));
  CHECK(near_list(scan_zeros_numeric(from_domain(omega_b()), 0, 2.2, 1e-9), {0, 0.5, 1.5, 2}, 1e-7));
  CHECK(near_list(scan_zeros_numeric(from_domain(omega_c()), 0, 3.1, 1e-9),
                  {0, 1.0 / 3, 2.0 / 3, 4.0 / 3, 5.0 / 3, 7.0 / 3, 8.0 / 3, 3}, 1e-7));
}

TEST_CASE("zero scan is symmetric and each hit is an exact zero") {
  const auto pc = from_domain(omega_c());
  const auto zs = scan_zeros_numeric(pc, -6.5, 6.5, 1e-9);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    CHECK(std::abs(zs[i] + zs[zs.size() - 1 - i]) < 1e-7);
    const Rational r(BigInt(static_cast<long long>(std::llround(zs[i] * 3))), BigInt(3));
    CHECK(zero_c(r));
  }
  CHECK(zs.size() == 31);  // 5 points of 3Z plus 26 of Z +- 1/3
}

TEST_CASE("zero scan on an unequal-length union finds the exact zeros") {
  const auto pe = from_domain(omega_e());
  for (double z : scan_zeros_numeric(pe, 0.1, 8, 1e-9)) {
    const Rational r(BigInt(static_cast<long long>(std::llround(z * 10))), BigInt(10));  // zeros lie in 2Z U (2/5)(2Z+1)
    CHECK(std::abs(z - r.to_double()) < 1e-7);
    CHECK(is_zero_exact(pe, r).is_zero);
  }
}

TEST_CASE("plot csv rows") {
  std::ostringstream out;
  write_plot_csv(out, omega_a(), 0, 1, 3);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "xi,re_p,im_p,abs_chi_hat");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
  CHECK(out.str().find("0.5,-2,") != std::string::npos);
}
