#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "seec/specfun.hpp"
#include "seec/summation.hpp"

using namespace seec;

TEST_CASE("hermite_eval small orders") {
  CHECK(hermite_eval(HermiteOrder(0), 1.7) == 1.0);
  CHECK(hermite_eval(HermiteOrder(2), 1.0) == 2.0);
  CHECK(hermite_eval(HermiteOrder(3), 0.5) == -5.0);
  CHECK(hermite_eval(HermiteOrder(1), -3.0) == -6.0);
}

TEST_CASE("hermite_eval rejects bad input") {
  CHECK_THROWS_AS(hermite_eval(HermiteOrder(2), std::nan("")), DomainError);
  CHECK_THROWS_AS(hermite_eval(HermiteOrder(2), std::numeric_limits<double>::infinity()),
                  DomainError);
  CHECK_THROWS_AS((void)HermiteOrder(-1), UnsupportedOrder);
  CHECK_THROWS_AS((void)HermiteOrder(kMaxEvalOrder + 1), UnsupportedOrder);
  CHECK_NOTHROW((void)HermiteOrder(kMaxEvalOrder));
}

TEST_CASE("hermite parity is exact") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> z(-6.0, 6.0);
  std::uniform_int_distribution<int> order(0, 40);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = order(rng);
    const double x = z(rng);
    const double a = hermite_eval(HermiteOrder(n), x);
    const double b = hermite_eval(HermiteOrder(n), -x);
    CHECK(a == (n % 2 ? -b : b));
  }
}

TEST_CASE("orthonormal recurrence matches scaled H_n") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> z(-4.0, 4.0);
  for (int n = 0; n <= 20; ++n) {
    const double x = z(rng);
    const double direct = hermite_eval(HermiteOrder(n), x) * std::exp(-0.5 * ln_hermite_norm2(n));
    CHECK(hermite_orthonormal(n, x).first == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("hermite_roots known values") {
  CHECK(hermite_roots(HermiteOrder(0)).size() == 0);
  const auto r1 = hermite_roots(HermiteOrder(1));
  REQUIRE(r1.size() == 1);
  CHECK(r1.roots(0) == 0.0);
  const auto r2 = hermite_roots(HermiteOrder(2));
  CHECK(r2.roots(0) == doctest::Approx(-0.7071067812).epsilon(1e-10));
  CHECK(r2.roots(1) == doctest::Approx(0.7071067812).epsilon(1e-10));
  CHECK(r2.roots(0) == -r2.roots(1));
  const auto r3 = hermite_roots(HermiteOrder(3));
  CHECK(r3.roots(0) == doctest::Approx(-1.2247448714).epsilon(1e-10));
  CHECK(r3.roots(1) == 0.0);
  CHECK(r3.roots(2) == doctest::Approx(1.2247448714).epsilon(1e-10));
  CHECK_THROWS_AS(hermite_roots(HermiteOrder(33)), UnsupportedOrder);
}

TEST_CASE("hermite roots are zeros, sorted, and interlace") {
  for (int n = 2; n <= kMaxRootOrder; ++n) {
    const auto r = hermite_roots(HermiteOrder(n)).roots;
    const auto prev = hermite_roots(HermiteOrder(n - 1)).roots;
    for (Eigen::Index k = 0; k < r.size(); ++k) {
      const auto [p, pm1] = hermite_orthonormal(n, r(k));
      CHECK(std::abs(p) <= 1e-11 * std::max(1.0, std::abs(pm1)));
      if (k > 0) CHECK(r(k - 1) < r(k));
      if (k + 1 < r.size()) {
        CHECK(r(k) < prev(k));
        CHECK(prev(k) < r(k + 1));
      }
    }
  }
}

TEST_CASE("hyp1f1_gauss against references") {
  CHECK(hyp1f1_gauss(0.0).value == 1.0);
  CHECK(hyp1f1_gauss(1.0).value == doctest::Approx(oracle::kHyp1f1At1).epsilon(1e-13));
  CHECK(hyp1f1_gauss(1.0).value == doctest::Approx(-0.0761589).epsilon(1e-6));
  CHECK(hyp1f1_gauss(2.0).value == doctest::Approx(oracle::kHyp1f1At2).epsilon(1e-13));
  CHECK(hyp1f1_gauss(2.0).value == doctest::Approx(-0.205362).epsilon(1e-5));
  CHECK(hyp1f1_gauss(8.0).value == doctest::Approx(oracle::kHyp1f1At8).epsilon(1e-12));
  CHECK(hyp1f1_gauss(0.5).value == doctest::Approx(oracle::kHyp1f1AtHalf).epsilon(1e-14));
  CHECK_FALSE(hyp1f1_gauss(8.0).degraded);
  CHECK(hyp1f1_gauss(9.0).degraded);
}

TEST_CASE("hyp1f1_gauss agrees with the direct series") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> x(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double v = x(rng);
    const auto r = hyp1f1_gauss(v);
    CHECK(std::abs(r.value - oracle::hyp1f1_direct(v)) <= 1e-13);
    CHECK(r.value == hyp1f1_gauss(-v).value);
  }
}

TEST_CASE("hyp2f2_gauss against references") {
  CHECK(hyp2f2_gauss(0.0).value == 1.0);
  CHECK(hyp2f2_gauss(1.0).value == doctest::Approx(oracle::kHyp2f2At1).epsilon(1e-14));
  CHECK(hyp2f2_gauss(1.0).value == doctest::Approx(0.739441).epsilon(1e-6));
  CHECK(hyp2f2_gauss(2.0).value == doctest::Approx(oracle::kHyp2f2At2).epsilon(1e-14));
  CHECK(hyp2f2_gauss(3.0).value == doctest::Approx(oracle::kHyp2f2At3).epsilon(1e-13));
  CHECK(hyp2f2_gauss(0.5).value == doctest::Approx(oracle::kHyp2f2AtHalf).epsilon(1e-14));
  CHECK(hyp2f2_gauss(1.0 / std::sqrt(2.0)).value ==
        doctest::Approx(oracle::kHyp2f2AtInvSqrt2).epsilon(1e-14));
  CHECK(hyp2f2_gauss(3.0).abs_error < 1e-13);
  CHECK_FALSE(hyp2f2_gauss(3.0).degraded);
  CHECK(hyp2f2_gauss(3.5).degraded);
}

TEST_CASE("hyp2f2_gauss agrees with the Dawson integral oracle") {
  for (const double x : {0.1, 0.4, 0.9, 1.3, 1.8, 2.4, 3.0}) {
    CHECK(std::abs(hyp2f2_gauss(x).value - oracle::hyp2f2_dawson(x)) <= 1e-12);
  }
}

TEST_CASE("ln_factorial") {
  CHECK(ln_factorial(0) == 0.0);
  CHECK(ln_factorial(1) == 0.0);
  CHECK(ln_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-15));
  CHECK(ln_factorial(5) == doctest::Approx(4.7874917).epsilon(1e-7));
  CHECK(ln_factorial(20) == doctest::Approx(oracle::kLnFactorial20).epsilon(1e-15));
  CHECK(ln_factorial(50) == doctest::Approx(oracle::kLnFactorial50).epsilon(1e-14));
  CHECK_THROWS_AS(ln_factorial(-1), DomainError);
}

TEST_CASE("log_potential") {
  const double v10 = log_potential(HermiteOrder(1), 0.0).value;
  CHECK(v10 == doctest::Approx(oracle::kLogPotential1At0).epsilon(1e-13));
  const double formula =
      2.0 * std::sqrt(oracle::kPi) * (std::log(2.0) + oracle::kEulerGamma / 2.0 - 1.0);
  CHECK(v10 == doctest::Approx(formula).epsilon(1e-13));
  CHECK(log_potential(HermiteOrder(1), 0.0).experimental);

  const double x = 1.0 / std::sqrt(2.0);
  CHECK(log_potential(HermiteOrder(2), x).value == log_potential(HermiteOrder(2), -x).value);
  CHECK_THROWS_AS(log_potential(HermiteOrder(0), 0.0), DomainError);
  CHECK_THROWS_AS(log_potential(HermiteOrder(1), std::nan("")), DomainError);
}

TEST_CASE("compensated summation") {
  NeumaierSum<double> s;
  s.add(1.0);
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  CHECK(s.sum() == 2.0);
  const std::vector<double> v{0.1, 0.2, 0.3, 0.4};
  CHECK(pairwise_sum(std::span<const double>(v)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pairwise_sum(std::span<const double>()) == 0.0);
}
