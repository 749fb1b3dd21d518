#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qwall/approx.hpp"
#include "qwall/error.hpp"
#include "qwall/occupancy.hpp"

using doctest::Approx;
using qwall::Side;

TEST_CASE("thermo point validation") {
  const qwall::ThermoPoint p(100, 4.0);
  CHECK(p.particles() == 100);
  CHECK(p.beta() * p.temperature() == Approx(1.0).epsilon(1e-16));
  CHECK_THROWS_AS(qwall::ThermoPoint(0, 1.0), qwall::DomainError);
  CHECK_THROWS_AS(qwall::ThermoPoint(10, 0.0), qwall::DomainError);
  CHECK_THROWS_AS(qwall::ThermoPoint(10, -1.0), qwall::DomainError);
  CHECK_THROWS_AS(qwall::ThermoPoint(10, INFINITY), qwall::DomainError);
}

TEST_CASE("occupation") {
  CHECK(qwall::occupation_from_exponent(std::numbers::ln2) == Approx(1.0).epsilon(1e-15));
  CHECK(qwall::occupation_from_exponent(800.0) == 0.0);
  // 1/(e - 1) from long double arithmetic.
  const double expected = static_cast<double>(1.0L / std::expm1(1.0L));
  CHECK(qwall::occupation(0.6, 0.1, 4.0) == Approx(expected).epsilon(1e-15));
  CHECK(expected == Approx(0.581977).epsilon(1e-6));
}

TEST_CASE("non-positive occupation exponent is a domain error") {
  CHECK_THROWS_AS(qwall::occupation(-1.0, 0.5, 2.0), qwall::DomainError);
  CHECK_THROWS_AS(qwall::occupation(-1.0, 0.5, 1.0), qwall::DomainError);
  CHECK_THROWS_AS(qwall::occupation_from_exponent(NAN), qwall::DomainError);
  CHECK_THROWS_AS(qwall::total_number(Side::Plus, -3.0, 1.0), qwall::DomainError);
}

TEST_CASE("total number examples") {
  CHECK(qwall::total_number(Side::Minus, 1e6, 1.0) == 0.0);

  // Plus, b = 10, alpha = ln 2 - 2.5: ground level holds exactly one particle
  // and level two adds exp(-(ln 2 - 2.5 + 22.5)) to leading order.
  const double alpha = std::numbers::ln2 - 2.5;
  const double excited = std::exp(-(alpha + 22.5));
  CHECK(excited == Approx(1.0318e-9).epsilon(1e-3));
  CHECK(qwall::total_number(Side::Plus, alpha, 10.0) ==
        Approx(1.0 + excited).epsilon(1e-15));

  const double b = 100.0;
  CHECK(qwall::total_number(Side::Minus, std::log1p(0.01) - b, b) ==
        Approx(100.0).epsilon(1e-12));
}

TEST_CASE("total number is strictly decreasing in alpha") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_t(-2.0, 4.0);
  std::uniform_real_distribution<double> log_x(-4.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double b = std::pow(10.0, -log_t(rng));
    const Side side = trial % 2 ? Side::Plus : Side::Minus;
    const double x = std::pow(10.0, log_x(rng));
    const double alpha = x - b * qwall::ground_energy(side);
    const double lower = qwall::total_number(side, alpha, b);
    const double higher = qwall::total_number(side, alpha + 1e-3 * x, b);
    REQUIRE(higher < lower);
  }
}

TEST_CASE("solve_alpha: single particle at t = 0.1") {
  const auto sol = qwall::solve_alpha(Side::Plus, qwall::ThermoPoint(1, 0.1));
  const double closed = std::numbers::ln2 - 2.5;
  CHECK(sol.alpha == Approx(-1.806853).epsilon(1e-6));
  CHECK(std::abs(sol.alpha - closed) < 1e-8);
  const long double brute = qwall::oracle::shifted_alpha(true, 1, 0.1L, 1000) - 2.5L;
  CHECK(std::abs(sol.alpha - static_cast<double>(brute)) < 1e-12);
  CHECK(sol.residual <= 1e-12);
  CHECK(sol.alpha == Approx(sol.shifted_alpha - 10.0 * 0.25).epsilon(1e-15));
}

TEST_CASE("solve_alpha: low-temperature limit is ln(1 + 1/N)") {
  for (double t : {1e-3, 5e-3, 1e-2}) {
    for (Side side : qwall::kSides) {
      const auto sol = qwall::solve_alpha(side, qwall::ThermoPoint(100, t));
      CHECK(std::abs(sol.shifted_alpha - std::log1p(0.01)) <= 1e-6);
      CHECK(sol.shifted_alpha == Approx(0.00995033).epsilon(1e-6));
    }
  }
}

TEST_CASE("solve_alpha agrees with the long double brute-force oracle") {
  for (double t : {0.3, 1.0, 7.0, 60.0, 500.0}) {
    for (Side side : qwall::kSides) {
      const auto sol = qwall::solve_alpha(side, qwall::ThermoPoint(100, t));
      const long double x =
          qwall::oracle::shifted_alpha(side == Side::Plus, 100, t, 100000);
      CHECK(sol.shifted_alpha == Approx(static_cast<double>(x)).epsilon(1e-11));
    }
  }
}

TEST_CASE("solver error carries the last bracket") {
  try {
    qwall::solve_alpha(Side::Plus, qwall::ThermoPoint(100, 50.0), 1e-12, 3);
    FAIL("expected SolverError");
  } catch (const qwall::SolverError& e) {
    CHECK(e.lower() > 0.0);
    CHECK(e.upper() > e.lower());
  }
  CHECK_THROWS_AS(qwall::solve_alpha(Side::Plus, qwall::ThermoPoint(1, 1.0), 0.0),
                  qwall::InvalidArgument);
}

TEST_CASE("level sums refuse to run past the level cap") {
  CHECK_THROWS_AS(qwall::solve_alpha(Side::Plus, qwall::ThermoPoint(10, 1e16)),
                  qwall::NumericError);
}

TEST_CASE("constraint solver properties on random points") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> particles(1, 1000);
  std::uniform_real_distribution<double> log_t(-2.0, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t n = particles(rng);
    const double t = std::pow(10.0, log_t(rng));
    const qwall::ThermoPoint point(n, t);
    const auto plus = qwall::solve_alpha(Side::Plus, point);
    const auto minus = qwall::solve_alpha(Side::Minus, point);
    INFO("N = " << n << ", t = " << t);
    REQUIRE(plus.shifted_alpha > 0.0);
    REQUIRE(minus.shifted_alpha > 0.0);
    REQUIRE(plus.residual <= 1e-10 * n);
    REQUIRE(minus.residual <= 1e-10 * n);
    REQUIRE(plus.alpha > minus.alpha);
    REQUIRE(plus.iterations <= qwall::kDefaultMaxIterations);
  }
}

TEST_CASE("high-temperature multiplier follows the two-term fugacity expansion") {
  // N = 1 keeps N*sqrt(b) small enough for the expansion to be asymptotic;
  // the discrepancy then falls like b^{3/2}.
  for (Side side : qwall::kSides) {
    double scaled[2];
    int i = 0;
    for (double b : {1e-3, 1e-4}) {
      const auto sol = qwall::solve_alpha(side, qwall::ThermoPoint(1, 1.0 / b));
      const double q = qwall::fugacity_expansion(side, 1, b).q();
      scaled[i++] = std::abs(std::exp(-sol.alpha) - q) / std::pow(b, 1.5);
    }
    CHECK(scaled[0] / scaled[1] < 4.0);
    CHECK(scaled[1] / scaled[0] < 4.0);
  }
}

TEST_CASE("solve_alpha at N = 100, t = 1e4 against the fugacity expansion") {
  // N sqrt(b) = 1 here, so the two-term expansion is only a rough guide.
  const auto sol = qwall::solve_alpha(Side::Plus, qwall::ThermoPoint(100, 1e4));
  const auto expansion = qwall::fugacity_expansion(Side::Plus, 100, 1e-4);
  CHECK(expansion.q() == Approx(0.2280629).epsilon(1e-6));
  CHECK(std::exp(-sol.alpha) == Approx(0.6016379941587772).epsilon(1e-10));
}
