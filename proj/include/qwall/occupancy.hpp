#pragma once

#include <cstdint>

#include "qwall/spectrum.hpp"

namespace qwall {

// Relative cutoff for the level sums: stop at the first term smaller than
// kDefaultTermTol times the running sum.
inline constexpr double kDefaultTermTol = 1e-16;

// Relative tolerance on the particle-number constraint, |sum N_n - N| <= tol*N.
inline constexpr double kDefaultSolverTol = 1e-12;

inline constexpr int kDefaultMaxIterations = 200;

// Occupations past this exponent (below 1e-304, where exp nears overflow)
// are clamped to exactly zero.
inline constexpr double kOccupationExponentCap = 700.0;

// Level sums give up with NumericError past this many levels (t of order
// 1e12 and above). Energies are exact integers or quarter-integers up to here.
inline constexpr LevelIndex kMaxLevels = 10'000'000;

// Particle count and dimensionless temperature of one well.
class ThermoPoint {
 public:
  // Throws DomainError unless particles >= 1 and temperature is finite and > 0.
  ThermoPoint(std::int64_t particles, double temperature);

  std::int64_t particles() const noexcept { return particles_; }
  double temperature() const noexcept { return temperature_; }
  double beta() const noexcept { return beta_; }

 private:
  std::int64_t particles_;
  double temperature_;
  double beta_;
};

// Lagrange multiplier fixing the particle number of one well.
// shifted_alpha = alpha + b*e_1 is the variable actually solved for; it is
// positive and stays well conditioned at low temperature where alpha itself
// is a large negative number.
struct AlphaSolution {
  double alpha = 0.0;
  double shifted_alpha = 0.0;
  double residual = 0.0;
  std::int64_t levels_used = 0;
  int iterations = 0;
};

// Result of one truncated pass over the spectrum.
struct LevelSum {
  double value = 0.0;
  // d(value)/d(shifted alpha); only filled by total_number_shifted.
  double derivative = 0.0;
  std::int64_t levels = 0;
};

// Bose-Einstein occupation 1/(exp(alpha + b*e_n) - 1).
// Throws DomainError when alpha + b*e_n <= 0.
double occupation(double alpha, double beta, double energy);

// Same, taking the exponent alpha + b*e_n directly.
double occupation_from_exponent(double exponent);

// sum_n N_n for the given alpha.
double total_number(Side side, double alpha, double beta,
                    double term_tol = kDefaultTermTol);

// sum_n N_n with the exponent of level n written as x + b*(e_n - e_1).
// Requires x > 0.
LevelSum total_number_shifted(Side side, double shifted_alpha, double beta,
                              double term_tol = kDefaultTermTol);

// Solves sum_n N_n = N for alpha. Brackets the shifted multiplier between
// ln(1 + 1/N), where the ground level alone holds N particles, and an upper
// end doubled until the constraint changes sign, then runs a safeguarded
// Newton iteration. Throws SolverError after max_iterations.
AlphaSolution solve_alpha(Side side, const ThermoPoint& point,
                          double tol = kDefaultSolverTol,
                          int max_iterations = kDefaultMaxIterations);

}  // namespace qwall
