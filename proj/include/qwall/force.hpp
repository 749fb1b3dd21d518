#pragma once

#include <cstdint>

#include "qwall/occupancy.hpp"
#include "qwall/spectrum.hpp"

namespace qwall {

// Dimensionless forces on the partition from each side and their
// difference, the net force pushing the wall towards the Plus half.
struct ForcePair {
  double f_plus = 0.0;
  double f_minus = 0.0;
  double delta_f = 0.0;
};

// A half force together with the multiplier it was evaluated at.
struct HalfForce {
  AlphaSolution alpha;
  double force = 0.0;
};

struct NetForceDetail {
  ForcePair forces;
  AlphaSolution alpha_plus;
  AlphaSolution alpha_minus;
};

// sum_n e_n N_n at an already solved multiplier. Terms are summed until one
// falls below term_tol times the running sum past the peak of e_n*N_n.
double force_sum(Side side, const AlphaSolution& alpha, double beta,
                 double term_tol = kDefaultTermTol);

HalfForce half_force_detail(Side side, const ThermoPoint& point,
                            double tol = kDefaultSolverTol);

double half_force(Side side, const ThermoPoint& point,
                  double tol = kDefaultSolverTol);

NetForceDetail net_force_detail(const ThermoPoint& point,
                                double tol = kDefaultSolverTol);

ForcePair net_force(const ThermoPoint& point, double tol = kDefaultSolverTol);

// t = 0 limit, N*(e_1^- - e_1^+) = 3N/4. The numeric path needs b < inf.
double net_force_zero_t(std::int64_t particles);

}  // namespace qwall
