#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qwall/approx.hpp"
#include "qwall/error.hpp"
#include "qwall/force.hpp"

using doctest::Approx;
using qwall::Side;
using qwall::SumPath;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("theta sums, both paths") {
  const double direct = qwall::theta_partition_sum(Side::Plus, 1, 1.0, SumPath::Direct);
  const double poisson = qwall::theta_partition_sum(Side::Plus, 1, 1.0, SumPath::Poisson);
  CHECK(direct == Approx(0.88613524849218998).epsilon(1e-14));
  CHECK(poisson == Approx(0.88613524849218998).epsilon(1e-14));
  CHECK(poisson == Approx(std::sqrt(kPi) / 2 * (1 - 2 * std::exp(-kPi * kPi))).epsilon(1e-8));

  const double cold = qwall::theta_partition_sum(Side::Minus, 1, 40.0, SumPath::Direct);
  CHECK(cold / std::exp(-40.0) == Approx(1.0).epsilon(1e-14));
  // The resummed form cancels down to rounding noise at large widths.
  CHECK(std::abs(qwall::theta_partition_sum(Side::Minus, 1, 40.0)) < 1e-15);

  const double hot = qwall::theta_partition_sum(Side::Minus, 1, 0.01);
  CHECK(hot == Approx(std::sqrt(kPi / 0.04) - 0.5).epsilon(1e-14));
  CHECK(hot == Approx(8.3623).epsilon(1e-5));
  CHECK(qwall::theta_partition_sum(Side::Minus, 1, 0.01, SumPath::Direct) ==
        Approx(hot).epsilon(1e-13));
}

TEST_CASE("theta identity over widths 1e-3 .. 10") {
  for (Side side : qwall::kSides) {
    for (double kb = 1e-3; kb <= 10.0 * (1 + 1e-9); kb *= std::sqrt(10.0)) {
      for (std::int64_t k : {1, 2, 5}) {
        const double b = kb / k;
        const double direct = qwall::theta_partition_sum(side, k, b, SumPath::Direct);
        const double poisson = qwall::theta_partition_sum(side, k, b, SumPath::Poisson);
        INFO(qwall::to_string(side) << " kb = " << kb);
        CHECK(std::abs(direct - poisson) <= 1e-12 * std::max(1.0, direct));
        CHECK(std::abs(direct - poisson) <= 1e-10 * direct);
      }
    }
  }
}

TEST_CASE("force sums, both paths") {
  CHECK(qwall::poisson_force_sum(Side::Plus, 1, 1.0, SumPath::Direct) ==
        Approx(0.44397243957959541).epsilon(1e-14));
  CHECK(qwall::poisson_force_sum(Side::Plus, 1, 1.0) ==
        Approx(0.44397243957959541).epsilon(1e-13));
  CHECK(qwall::poisson_force_sum(Side::Minus, 1, 10.0) ==
        Approx(4.5399929762501845e-05).epsilon(1e-10));
  const double b = 1e-6;
  CHECK(qwall::poisson_force_sum(Side::Minus, 3, b) ==
        Approx(std::sqrt(kPi / (16 * 27 * b * b * b))).epsilon(1e-12));
}

TEST_CASE("force-sum identity over widths 1e-3 .. 10") {
  for (Side side : qwall::kSides) {
    for (double kb = 1e-3; kb <= 10.0 * (1 + 1e-9); kb *= std::sqrt(10.0)) {
      const double direct = qwall::poisson_force_sum(side, 1, kb, SumPath::Direct);
      const double poisson = qwall::poisson_force_sum(side, 1, kb, SumPath::Poisson);
      INFO(qwall::to_string(side) << " kb = " << kb);
      CHECK(std::abs(direct - poisson) <= 1e-10 * direct);
    }
  }
}

TEST_CASE("fugacity series reproduce the level sums for alpha > 0") {
  for (Side side : qwall::kSides) {
    for (double alpha : {0.05, 0.7, 3.0}) {
      for (double b : {1e-3, 0.05, 2.0}) {
        const double direct = qwall::total_number(side, alpha, b);
        CHECK(qwall::fugacity_series_total(side, alpha, b) == Approx(direct).epsilon(1e-11));

        qwall::AlphaSolution sol;
        sol.alpha = alpha;
        sol.shifted_alpha = alpha + b * qwall::ground_energy(side);
        CHECK(qwall::fugacity_series_force(side, alpha, b) ==
              Approx(qwall::force_sum(side, sol, b)).epsilon(1e-11));
      }
    }
  }
  CHECK_THROWS_AS(qwall::fugacity_series_total(Side::Plus, -0.1, 0.1), qwall::DomainError);
  CHECK_THROWS_AS(qwall::fugacity_series_total(Side::Plus, 1e-9, 0.1), qwall::DomainError);
}

TEST_CASE("two-term fugacity expansion") {
  const auto e = qwall::fugacity_expansion(Side::Plus, 1, 1e-6);
  CHECK(e.q_leading == Approx(1.1283791670955126e-3).epsilon(1e-14));
  CHECK(e.q_subleading == Approx(-9.0031631615710606e-7).epsilon(1e-14));
  CHECK(e.valid());

  for (std::int64_t n : {1, 10, 100}) {
    const double b = 1e-5;
    const auto plus = qwall::fugacity_expansion(Side::Plus, n, b);
    const auto minus = qwall::fugacity_expansion(Side::Minus, n, b);
    CHECK(minus.q_subleading - plus.q_subleading == Approx(2.0 * n * b / kPi).epsilon(1e-10));
    CHECK(plus.q_leading == minus.q_leading);
  }
  // N sqrt(b) ~ 3 at N = 100, b = 1e-3: far outside the expansion's range.
  CHECK_FALSE(qwall::fugacity_expansion(Side::Plus, 100, 1e-3).valid());
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(qwall::theta_partition_sum(Side::Plus, 0, 1.0), qwall::DomainError);
  CHECK_THROWS_AS(qwall::poisson_force_sum(Side::Plus, 1, -1.0), qwall::DomainError);
  CHECK_THROWS_AS(qwall::fugacity_expansion(Side::Plus, 0, 1e-3), qwall::DomainError);
  CHECK_THROWS_AS(qwall::delta_f_high_t(100, -1.0), qwall::DomainError);
}
