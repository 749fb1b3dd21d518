#include "qwall/occupancy.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "detail/compensated_sum.hpp"
#include "qwall/error.hpp"

namespace qwall {

namespace {

void require_positive_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("inverse temperature must be finite and > 0");
  }
}

}  // namespace

ThermoPoint::ThermoPoint(std::int64_t particles, double temperature)
    : particles_(particles), temperature_(temperature), beta_(1.0 / temperature) {
  if (particles < 1) {
    throw DomainError("particle count must be >= 1, got " +
                      std::to_string(particles));
  }
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("temperature must be finite and > 0");
  }
}

double occupation_from_exponent(double exponent) {
  if (!(exponent > 0.0)) {
    std::ostringstream msg;
    msg << "occupation diverges: alpha + b*e_n = " << exponent << " <= 0";
    throw DomainError(msg.str());
  }
  if (exponent > kOccupationExponentCap) return 0.0;
  return 1.0 / std::expm1(exponent);
}

double occupation(double alpha, double beta, double energy) {
  return occupation_from_exponent(alpha + beta * energy);
}

LevelSum total_number_shifted(Side side, double shifted_alpha, double beta,
                              double term_tol) {
  require_positive_beta(beta);
  if (!(shifted_alpha > 0.0)) {
    throw DomainError("ground-state occupation diverges: alpha + b*e_1 <= 0");
  }

  detail::CompensatedSum sum;
  detail::CompensatedSum slope;
  LevelSum out;
  for (LevelIndex n = 1;; ++n) {
    if (n > kMaxLevels) {
      throw NumericError("occupation sum did not converge within 1e7 levels");
    }
    const double exponent = shifted_alpha + beta * excitation_energy(side, n);
    if (exponent > kOccupationExponentCap) break;
    const double occ = 1.0 / std::expm1(exponent);
    sum.add(occ);
    slope.add(-occ * (occ + 1.0));
    out.levels = n;
    // Occupations fall strictly with n, so the first small term bounds
    // the rest of the tail geometrically.
    if (occ < term_tol * sum.value()) break;
  }
  out.value = sum.value();
  out.derivative = slope.value();
  return out;
}

double total_number(Side side, double alpha, double beta, double term_tol) {
  require_positive_beta(beta);
  return total_number_shifted(side, alpha + beta * ground_energy(side), beta,
                              term_tol)
      .value;
}

AlphaSolution solve_alpha(Side side, const ThermoPoint& point, double tol,
                          int max_iterations) {
  if (!(tol > 0.0)) throw InvalidArgument("solver tolerance must be > 0");

  const double target = static_cast<double>(point.particles());
  const double beta = point.beta();
  const auto eval = [&](double x) {
    return total_number_shifted(side, x, beta);
  };

  // Constraint F(x) = S(x) - N is convex and strictly decreasing in x.
  // At x = ln(1 + 1/N) the ground level alone holds N particles, so F >= 0.
  double lo = std::log1p(1.0 / target);
  LevelSum at_lo = eval(lo);
  int iterations = 1;

  double hi = 2.0 * lo;
  LevelSum at_hi = eval(hi);
  ++iterations;
  while (at_hi.value > target) {
    lo = hi;
    at_lo = at_hi;
    hi *= 2.0;
    if (iterations >= max_iterations) {
      throw SolverError("could not bracket the particle-number constraint",
                        lo, hi);
    }
    at_hi = eval(hi);
    ++iterations;
  }

  // Newton from the left edge of the bracket. On a convex decreasing
  // function the iterates approach the root from below; the bracket only
  // matters if rounding pushes a step outside it.
  double x = lo;
  LevelSum at_x = at_lo;
  for (;;) {
    const double excess = at_x.value - target;
    const double residual = std::abs(excess);
    if (residual <= tol * target) {
      AlphaSolution sol;
      sol.shifted_alpha = x;
      sol.alpha = x - beta * ground_energy(side);
      sol.residual = residual;
      sol.levels_used = at_x.levels;
      sol.iterations = iterations;
      return sol;
    }
    if (excess > 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (iterations >= max_iterations) {
      std::ostringstream msg;
      msg << "particle-number constraint did not converge after " << iterations
          << " iterations (residual " << residual << ")";
      throw SolverError(msg.str(), lo, hi);
    }

    double next = at_x.derivative < 0.0 ? x - excess / at_x.derivative : lo;
    if (!(next > lo && next < hi) || next == x) next = 0.5 * (lo + hi);
    if (next <= lo || next >= hi) {
      throw SolverError("bracket collapsed before reaching tolerance", lo, hi);
    }
    x = next;
    at_x = eval(x);
    ++iterations;
  }
}

}  // namespace qwall
