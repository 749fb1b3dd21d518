#pragma once

#include <cstdint>
#include <functional>

#include "qwall/spectrum.hpp"

namespace qwall {

// ---------------------------------------------------------------------------
// Low temperature, t < 1.
// ---------------------------------------------------------------------------

// Ground level plus the first excited level of each well:
// 3N/4 + 3 exp(-3/t) - 2 exp(-2/t).
double delta_f_low_t(std::int64_t particles, double temperature);

// ---------------------------------------------------------------------------
// Intermediate temperature, 1 < t < 2N/3.
// ---------------------------------------------------------------------------

struct LinearEstimate {
  double delta_f = 0.0;
  // False once t exceeds 2N/3, above which the linear decrease no longer
  // tracks the exact force.
  bool in_range = true;
};

// 3N/4 - t/(e - 1)^2. Only levels with b*(e_n - e_1) ~ 1 contribute to the
// net force; the representative level m solves m^2 - m = t and about m such
// levels each add (1/b)[(1 + 1/m)/(e^{1+1/m} - 1) - 1/(e - 1)].
LinearEstimate delta_f_linear(std::int64_t particles, double temperature);

// ---------------------------------------------------------------------------
// Trapezoid-rule treatment of the level sums, t >> 1.
// ---------------------------------------------------------------------------

// sum_{n>=1} y(s_n) ~ y(s_1)/2 + (1/ds) int_{s_1}^inf y(s) ds for equidistant
// s_n with spacing ds. The integral is done by double-exponential quadrature
// on the half line. Throws NumericError if the quadrature error estimate
// exceeds 1e-8 relative.
double trapezoid_sum(const std::function<double(double)>& term, double s1,
                     double ds);

// Closed form (sqrt(pi)/96)(63 - 35 alpha) of
// int_0^inf (alpha + s^2)/(e^{alpha + s^2} - 1) ds, first order in alpha.
double bose_integral_closed(double alpha);

// The same integral by quadrature, absolute error < 1e-10. Throws
// DomainError for alpha <= -1.
double bose_integral_quadrature(double alpha);

// A(sqrt|alpha| / u) / sqrt|alpha| with A = arctan for alpha > 0 and arctanh
// for alpha < 0. Both branches share the series
// (1/u) sum_k (-alpha/u^2)^k / (2k + 1), used for |alpha| < 1e-6.
double arctan_ratio(double alpha, double u);

// Right-hand side of the trapezoid-rule particle-number constraint:
//   1/(alpha + b e_1) + (1/2)/(alpha + b e_2) - 3/4
//     - (sqrt(2 - alpha) - s_2) / (2 sqrt b)
//     + [arctan_ratio(alpha, s_2) - arctan_ratio(alpha, sqrt(2 - alpha))] / sqrt b
// with s_2 = sqrt(b e_2). Requires -b e_1 < alpha < 2.
double semi_analytic_constraint(Side side, double alpha, double beta);

// Solves semi_analytic_constraint(side, alpha, 1/t) = N for alpha with TOMS 748.
// Throws OutOfRangeError if the root lies at alpha >= 2 and SolverError if no
// bracket exists in (-b e_1, 2).
double semi_analytic_alpha(Side side, std::int64_t particles, double temperature);

// (-N alpha + 1/2 - sqrt(e_1)) t + (sqrt(pi)/96)(63 - 35 alpha) t^{3/2}.
double semi_analytic_f(Side side, std::int64_t particles, double alpha,
                       double temperature);

// (N t + (35/96) sqrt(pi) t^{3/2})(alpha_plus - alpha_minus)
//   + (sqrt(e_1^+) - sqrt(e_1^-)) t.
double semi_analytic_delta_f_from_alphas(std::int64_t particles,
                                         double temperature, double alpha_plus,
                                         double alpha_minus);

struct SemiAnalyticResult {
  double alpha_plus = 0.0;
  double alpha_minus = 0.0;
  double f_plus = 0.0;
  double f_minus = 0.0;
  double delta_f = 0.0;
};

SemiAnalyticResult semi_analytic(std::int64_t particles, double temperature);

double semi_analytic_delta_f(std::int64_t particles, double temperature);

// ---------------------------------------------------------------------------
// High temperature: fugacity series and Poisson resummation.
// ---------------------------------------------------------------------------

enum class SumPath { Direct, Poisson };

// sum_{n>=1} exp(-k b e_n). The Poisson path evaluates
// -sigma/2 + sqrt(pi/(4kb)) sum_m tau^m exp(-pi^2 m^2/(kb)).
// The Poisson path is accurate to ~1e-16 absolute, so it loses relative
// accuracy once kb grows past ~30 and the sum itself becomes tiny.
double theta_partition_sum(Side side, std::int64_t k, double beta,
                           SumPath path = SumPath::Poisson);

// sum_{n>=1} e_n exp(-k b e_n). The Poisson path evaluates
// sqrt(pi/(16 k^3 b^3)) sum_m tau^m (1 - 2 pi^2 m^2/(kb)) exp(-pi^2 m^2/(kb)).
double poisson_force_sum(Side side, std::int64_t k, double beta,
                         SumPath path = SumPath::Poisson);

// sum_n N_n and sum_n e_n N_n expanded in q = exp(-alpha), each power of q
// carrying a resummed theta series. Converges for alpha > 0 only; throws
// DomainError otherwise (or when more than 10^7 powers would be needed).
double fugacity_series_total(Side side, double alpha, double beta);
double fugacity_series_force(Side side, double alpha, double beta);

// Two-term small-b solution of the particle-number constraint for q.
struct FugacityExpansion {
  double q_leading = 0.0;     // 2N sqrt(b/pi)
  double q_subleading = 0.0;  // 2N (sigma - sqrt(2) N) b/pi
  double beta = 0.0;

  double q() const { return q_leading + q_subleading; }
  // The expansion is only meaningful for 0 < q < 1.
  bool valid() const { return q() > 0.0 && q() < 1.0; }
};

FugacityExpansion fugacity_expansion(Side side, std::int64_t particles,
                                     double beta);

// Leading high-temperature net force (N/2) sqrt(t/pi).
double delta_f_high_t(std::int64_t particles, double temperature);

}  // namespace qwall
