#include "qwall/force.hpp"

#include <cmath>
#include <string>

#include "detail/compensated_sum.hpp"
#include "qwall/error.hpp"

namespace qwall {

double force_sum(Side side, const AlphaSolution& alpha, double beta,
                 double term_tol) {
  if (!(alpha.shifted_alpha > 0.0)) {
    throw DomainError("ground-state occupation diverges: alpha + b*e_1 <= 0");
  }
  detail::CompensatedSum sum;
  for (LevelIndex n = 1;; ++n) {
    if (n > kMaxLevels) {
      throw NumericError("force sum did not converge within 1e7 levels");
    }
    const double gap = beta * excitation_energy(side, n);
    const double exponent = alpha.shifted_alpha + gap;
    if (exponent > kOccupationExponentCap) break;
    const double term = energy_level_extended(side, n) / std::expm1(exponent);
    sum.add(term);
    // e_n*N_n rises while b*(e_n - e_1) < 1; only cut on the falling side.
    if (gap > 1.0 && term < term_tol * sum.value()) break;
  }
  return sum.value();
}

HalfForce half_force_detail(Side side, const ThermoPoint& point, double tol) {
  HalfForce out;
  out.alpha = solve_alpha(side, point, tol);
  out.force = force_sum(side, out.alpha, point.beta());
  return out;
}

double half_force(Side side, const ThermoPoint& point, double tol) {
  return half_force_detail(side, point, tol).force;
}

NetForceDetail net_force_detail(const ThermoPoint& point, double tol) {
  const HalfForce plus = half_force_detail(Side::Plus, point, tol);
  const HalfForce minus = half_force_detail(Side::Minus, point, tol);
  NetForceDetail out;
  out.alpha_plus = plus.alpha;
  out.alpha_minus = minus.alpha;
  out.forces.f_plus = plus.force;
  out.forces.f_minus = minus.force;
  out.forces.delta_f = minus.force - plus.force;
  return out;
}

ForcePair net_force(const ThermoPoint& point, double tol) {
  return net_force_detail(point, tol).forces;
}

double net_force_zero_t(std::int64_t particles) {
  if (particles < 1) {
    throw DomainError("particle count must be >= 1, got " +
                      std::to_string(particles));
  }
  return (ground_energy(Side::Minus) - ground_energy(Side::Plus)) *
         static_cast<double>(particles);
}

}  // namespace qwall
