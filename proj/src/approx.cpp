#include "qwall/approx.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "qwall/error.hpp"

namespace qwall {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;  // sqrt(pi)

void require_particles(std::int64_t particles) {
  if (particles < 1) {
    throw DomainError("particle count must be >= 1, got " +
                      std::to_string(particles));
  }
}

void require_temperature(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("temperature must be finite and > 0");
  }
}

// z/(e^z - 1), continuous through z = 0.
double bose_weight(double z) {
  if (std::abs(z) < 1e-5) return 1.0 - z / 2.0 + z * z / 12.0;
  return z / std::expm1(z);
}

}  // namespace

double delta_f_low_t(std::int64_t particles, double temperature) {
  require_particles(particles);
  require_temperature(temperature);
  const double n = static_cast<double>(particles);
  return 0.75 * n + 3.0 * std::exp(-3.0 / temperature) -
         2.0 * std::exp(-2.0 / temperature);
}

LinearEstimate delta_f_linear(std::int64_t particles, double temperature) {
  require_particles(particles);
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw DomainError("temperature must be finite and >= 0");
  }
  const double n = static_cast<double>(particles);
  const double em1 = std::numbers::e - 1.0;
  LinearEstimate out;
  out.delta_f = 0.75 * n - temperature / (em1 * em1);
  out.in_range = temperature <= 2.0 * n / 3.0;
  return out;
}

double trapezoid_sum(const std::function<double(double)>& term, double s1,
                     double ds) {
  if (!(ds > 0.0) || !std::isfinite(ds)) {
    throw DomainError("trapezoid spacing must be finite and > 0");
  }
  if (!std::isfinite(s1)) throw DomainError("trapezoid start must be finite");

  boost::math::quadrature::exp_sinh<double> integrator;
  double error = 0.0;
  double l1 = 0.0;
  const double integral =
      integrator.integrate(term, s1, std::numeric_limits<double>::infinity(),
                           1e-12, &error, &l1);
  if (!std::isfinite(integral) || error > 1e-8 * l1) {
    std::ostringstream msg;
    msg << "trapezoid integral did not converge (estimate " << integral
        << ", error " << error << ")";
    throw NumericError(msg.str());
  }
  return 0.5 * term(s1) + integral / ds;
}

double bose_integral_closed(double alpha) {
  return kSqrtPi / 96.0 * (63.0 - 35.0 * alpha);
}

double bose_integral_quadrature(double alpha) {
  if (!(alpha > -1.0) || std::isnan(alpha)) {
    throw DomainError("bose integral requires alpha > -1");
  }
  const auto integrand = [alpha](double s) { return bose_weight(alpha + s * s); };
  boost::math::quadrature::exp_sinh<double> integrator;
  double error = 0.0;
  double l1 = 0.0;
  const double value =
      integrator.integrate(integrand, 0.0, std::numeric_limits<double>::infinity(),
                           1e-14, &error, &l1);
  if (!std::isfinite(value) || error > 1e-10) {
    std::ostringstream msg;
    msg << "bose integral quadrature error " << error << " exceeds 1e-10";
    throw NumericError(msg.str());
  }
  return value;
}

double arctan_ratio(double alpha, double u) {
  if (!(u > 0.0)) throw DomainError("arctan_ratio requires u > 0");
  if (std::abs(alpha) < 1e-6) {
    // Removable singularity at alpha = 0; six terms reach rounding level.
    const double x = -alpha / (u * u);
    double series = 0.0;
    double power = 1.0;
    for (int k = 0; k < 6; ++k) {
      series += power / (2.0 * k + 1.0);
      power *= x;
    }
    return series / u;
  }
  const double root = std::sqrt(std::abs(alpha));
  const double arg = root / u;
  if (alpha > 0.0) return std::atan(arg) / root;
  if (!(arg < 1.0)) {
    throw DomainError("arctanh branch requires |alpha| < u^2");
  }
  return std::atanh(arg) / root;
}

double semi_analytic_constraint(Side side, double alpha, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("inverse temperature must be finite and > 0");
  }
  const double e1 = ground_energy(side);
  const double e2 = energy_level_extended(side, 2);
  if (!(alpha + beta * e1 > 0.0)) {
    throw DomainError("constraint requires alpha + b*e_1 > 0");
  }
  if (!(alpha < 2.0)) throw DomainError("constraint requires alpha < 2");

  const double sqrt_b = std::sqrt(beta);
  const double s2 = std::sqrt(beta * e2);
  const double s_top = std::sqrt(2.0 - alpha);
  return 1.0 / (alpha + beta * e1) + 0.5 / (alpha + beta * e2) - 0.75 -
         (s_top - s2) / (2.0 * sqrt_b) +
         (arctan_ratio(alpha, s2) - arctan_ratio(alpha, s_top)) / sqrt_b;
}

double semi_analytic_alpha(Side side, std::int64_t particles, double temperature) {
  require_particles(particles);
  require_temperature(temperature);
  const double target = static_cast<double>(particles);
  const double beta = 1.0 / temperature;
  const double floor = -beta * ground_energy(side);
  const auto excess = [&](double alpha) {
    return semi_analytic_constraint(side, alpha, beta) - target;
  };

  const double hi = std::nextafter(2.0, 0.0);
  if (excess(hi) >= 0.0) {
    throw OutOfRangeError(
        "semi-analytic multiplier lies at alpha >= 2, outside the formula's range");
  }

  // The 1/(alpha + b e_1) pole drives the constraint to +inf at the floor.
  double lo = hi;
  bool bracketed = false;
  for (double offset = 2.0 - floor; offset > 0.0; offset *= 0.5) {
    lo = floor + offset;
    if (!(lo > floor)) break;
    if (lo < hi && excess(lo) > 0.0) {
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    throw SolverError("no bracket for the semi-analytic constraint", floor, hi);
  }

  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      excess, lo, hi, boost::math::tools::eps_tolerance<double>(), max_iter);
  if (max_iter >= 200) {
    throw SolverError("semi-analytic constraint did not converge", a, b);
  }
  return std::abs(excess(a)) <= std::abs(excess(b)) ? a : b;
}

double semi_analytic_f(Side side, std::int64_t particles, double alpha,
                       double temperature) {
  const double n = static_cast<double>(particles);
  return (-n * alpha + 0.5 - std::sqrt(ground_energy(side))) * temperature +
         bose_integral_closed(alpha) * std::pow(temperature, 1.5);
}

double semi_analytic_delta_f_from_alphas(std::int64_t particles,
                                         double temperature, double alpha_plus,
                                         double alpha_minus) {
  const double n = static_cast<double>(particles);
  const double t = temperature;
  return (n * t + 35.0 / 96.0 * kSqrtPi * std::pow(t, 1.5)) *
             (alpha_plus - alpha_minus) +
         (std::sqrt(ground_energy(Side::Plus)) -
          std::sqrt(ground_energy(Side::Minus))) *
             t;
}

SemiAnalyticResult semi_analytic(std::int64_t particles, double temperature) {
  SemiAnalyticResult out;
  out.alpha_plus = semi_analytic_alpha(Side::Plus, particles, temperature);
  out.alpha_minus = semi_analytic_alpha(Side::Minus, particles, temperature);
  out.f_plus = semi_analytic_f(Side::Plus, particles, out.alpha_plus, temperature);
  out.f_minus =
      semi_analytic_f(Side::Minus, particles, out.alpha_minus, temperature);
  out.delta_f = semi_analytic_delta_f_from_alphas(particles, temperature,
                                                  out.alpha_plus, out.alpha_minus);
  return out;
}

double semi_analytic_delta_f(std::int64_t particles, double temperature) {
  return semi_analytic(particles, temperature).delta_f;
}

}  // namespace qwall
