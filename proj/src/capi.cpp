#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "qwall/approx.hpp"
#include "qwall/error.hpp"
#include "qwall/force.hpp"
#include "qwall/occupancy.hpp"
#include "qwall/qwall.h"
#include "qwall/spectrum.hpp"
#include "qwall/sweep.hpp"

struct qwall_sweep_config {
  qwall::SweepConfig config;
};

struct qwall_sweep_result {
  std::vector<qwall::SweepRow> rows;
};

namespace {

thread_local std::string last_error;

qwall_status fail(qwall_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs body, translating library exceptions into status codes.
template <typename Body>
qwall_status guarded(Body&& body) {
  try {
    body();
    return QWALL_OK;
  } catch (const qwall::DomainError& e) {
    return fail(QWALL_ERR_DOMAIN, e.what());
  } catch (const qwall::InvalidArgument& e) {
    return fail(QWALL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const qwall::SolverError& e) {
    return fail(QWALL_ERR_SOLVER, e.what());
  } catch (const qwall::NumericError& e) {
    return fail(QWALL_ERR_NUMERIC, e.what());
  } catch (const qwall::OutOfRangeError& e) {
    return fail(QWALL_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QWALL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QWALL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QWALL_ERR_INTERNAL, "unknown error");
  }
}

qwall_status null_argument(const char* name) {
  last_error = std::string("null pointer passed for ") + name;
  return QWALL_ERR_INVALID_ARGUMENT;
}

qwall::Side to_side(qwall_side side) {
  if (side == QWALL_SIDE_PLUS) return qwall::Side::Plus;
  if (side == QWALL_SIDE_MINUS) return qwall::Side::Minus;
  throw qwall::InvalidArgument("unknown side");
}

qwall::Method to_method(qwall_method method) {
  switch (method) {
    case QWALL_METHOD_NUMERIC:
      return qwall::Method::Numeric;
    case QWALL_METHOD_LOW_T:
      return qwall::Method::LowT;
    case QWALL_METHOD_LINEAR:
      return qwall::Method::Linear;
    case QWALL_METHOD_SEMI_ANALYTIC:
      return qwall::Method::SemiAnalytic;
    case QWALL_METHOD_HIGH_T:
      return qwall::Method::HighT;
  }
  throw qwall::InvalidArgument("unknown method");
}

qwall_method from_method(qwall::Method method) {
  switch (method) {
    case qwall::Method::Numeric:
      return QWALL_METHOD_NUMERIC;
    case qwall::Method::LowT:
      return QWALL_METHOD_LOW_T;
    case qwall::Method::Linear:
      return QWALL_METHOD_LINEAR;
    case qwall::Method::SemiAnalytic:
      return QWALL_METHOD_SEMI_ANALYTIC;
    case qwall::Method::HighT:
      return QWALL_METHOD_HIGH_T;
  }
  return QWALL_METHOD_NUMERIC;
}

qwall_row_status from_row_status(qwall::RowStatus status) {
  switch (status) {
    case qwall::RowStatus::Ok:
      return QWALL_ROW_OK;
    case qwall::RowStatus::OutOfRange:
      return QWALL_ROW_OUT_OF_RANGE;
    case qwall::RowStatus::Error:
      return QWALL_ROW_ERROR;
  }
  return QWALL_ROW_ERROR;
}

void copy_optional(const std::optional<double>& value, int* has, double* out) {
  *has = value.has_value() ? 1 : 0;
  *out = value.value_or(0.0);
}

}  // namespace

extern "C" {

const char* qwall_version(void) { return "1.0.0"; }

const char* qwall_last_error(void) { return last_error.c_str(); }

const char* qwall_status_name(qwall_status status) {
  switch (status) {
    case QWALL_OK:
      return "ok";
    case QWALL_ERR_DOMAIN:
      return "domain error";
    case QWALL_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case QWALL_ERR_SOLVER:
      return "solver error";
    case QWALL_ERR_NUMERIC:
      return "numeric error";
    case QWALL_ERR_OUT_OF_RANGE:
      return "out of range";
    case QWALL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* qwall_method_name(qwall_method method) {
  try {
    // Names are string literals, so the view is null-terminated.
    return qwall::to_string(to_method(method)).data();
  } catch (...) {
    return nullptr;
  }
}

qwall_status qwall_method_from_name(const char* name, qwall_method* out) {
  if (name == nullptr) return null_argument("name");
  if (out == nullptr) return null_argument("out");
  const auto method = qwall::parse_method(name);
  if (!method) {
    return fail(QWALL_ERR_INVALID_ARGUMENT,
                (std::string("unknown method '") + name + "'").c_str());
  }
  *out = from_method(*method);
  return QWALL_OK;
}

const char* qwall_row_status_name(qwall_row_status status) {
  switch (status) {
    case QWALL_ROW_OK:
      return qwall::to_string(qwall::RowStatus::Ok).data();
    case QWALL_ROW_OUT_OF_RANGE:
      return qwall::to_string(qwall::RowStatus::OutOfRange).data();
    case QWALL_ROW_ERROR:
      return qwall::to_string(qwall::RowStatus::Error).data();
  }
  return "error";
}

qwall_status qwall_energy_level(qwall_side side, int64_t n, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = qwall::energy_level(to_side(side), n); });
}

double qwall_energy_level_extended(qwall_side side, int64_t n) {
  return qwall::energy_level_extended(
      side == QWALL_SIDE_PLUS ? qwall::Side::Plus : qwall::Side::Minus, n);
}

qwall_status qwall_occupation(double alpha, double beta, double energy,
                              double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = qwall::occupation(alpha, beta, energy); });
}

qwall_status qwall_total_number(qwall_side side, double alpha, double beta,
                                double term_tol, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = qwall::total_number(to_side(side), alpha, beta, term_tol);
  });
}

qwall_status qwall_solve_alpha(qwall_side side, int64_t particles,
                               double temperature, double tol,
                               qwall_alpha_solution* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const qwall::AlphaSolution sol = qwall::solve_alpha(
        to_side(side), qwall::ThermoPoint(particles, temperature), tol);
    out->alpha = sol.alpha;
    out->shifted_alpha = sol.shifted_alpha;
    out->residual = sol.residual;
    out->levels_used = sol.levels_used;
    out->iterations = sol.iterations;
  });
}

qwall_status qwall_half_force(qwall_side side, int64_t particles,
                              double temperature, double tol, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = qwall::half_force(to_side(side),
                             qwall::ThermoPoint(particles, temperature), tol);
  });
}

qwall_status qwall_net_force(int64_t particles, double temperature, double tol,
                             qwall_force_pair* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const qwall::ForcePair pair =
        qwall::net_force(qwall::ThermoPoint(particles, temperature), tol);
    out->f_plus = pair.f_plus;
    out->f_minus = pair.f_minus;
    out->delta_f = pair.delta_f;
  });
}

qwall_status qwall_net_force_zero_t(int64_t particles, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = qwall::net_force_zero_t(particles); });
}

qwall_status qwall_delta_f_low_t(int64_t particles, double temperature,
                                 double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = qwall::delta_f_low_t(particles, temperature); });
}

qwall_status qwall_delta_f_linear(int64_t particles, double temperature,
                                  double* out, int* in_range) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const qwall::LinearEstimate estimate =
        qwall::delta_f_linear(particles, temperature);
    *out = estimate.delta_f;
    if (in_range != nullptr) *in_range = estimate.in_range ? 1 : 0;
  });
}

qwall_status qwall_semi_analytic_alpha(qwall_side side, int64_t particles,
                                       double temperature, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = qwall::semi_analytic_alpha(to_side(side), particles, temperature);
  });
}

qwall_status qwall_semi_analytic_delta_f(int64_t particles, double temperature,
                                         double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded(
      [&] { *out = qwall::semi_analytic_delta_f(particles, temperature); });
}

qwall_status qwall_delta_f_high_t(int64_t particles, double temperature,
                                  double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = qwall::delta_f_high_t(particles, temperature); });
}

qwall_status qwall_bose_integral_closed(double alpha, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = qwall::bose_integral_closed(alpha); });
}

qwall_status qwall_bose_integral_quadrature(double alpha, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = qwall::bose_integral_quadrature(alpha); });
}

qwall_status qwall_theta_partition_sum(qwall_side side, int64_t k, double beta,
                                       int direct, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = qwall::theta_partition_sum(
        to_side(side), k, beta,
        direct ? qwall::SumPath::Direct : qwall::SumPath::Poisson);
  });
}

qwall_status qwall_poisson_force_sum(qwall_side side, int64_t k, double beta,
                                     int direct, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = qwall::poisson_force_sum(
        to_side(side), k, beta,
        direct ? qwall::SumPath::Direct : qwall::SumPath::Poisson);
  });
}

qwall_status qwall_fugacity_expansion(qwall_side side, int64_t particles,
                                      double beta, double* q_leading,
                                      double* q_subleading, int* valid) {
  if (q_leading == nullptr) return null_argument("q_leading");
  if (q_subleading == nullptr) return null_argument("q_subleading");
  return guarded([&] {
    const qwall::FugacityExpansion expansion =
        qwall::fugacity_expansion(to_side(side), particles, beta);
    *q_leading = expansion.q_leading;
    *q_subleading = expansion.q_subleading;
    if (valid != nullptr) *valid = expansion.valid() ? 1 : 0;
  });
}

qwall_sweep_config* qwall_sweep_config_create(void) {
  try {
    return new qwall_sweep_config{};
  } catch (...) {
    last_error = "out of memory";
    return nullptr;
  }
}

void qwall_sweep_config_destroy(qwall_sweep_config* config) { delete config; }

qwall_status qwall_sweep_config_set_particles(qwall_sweep_config* config,
                                              int64_t particles) {
  if (config == nullptr) return null_argument("config");
  if (particles < 1) {
    return fail(QWALL_ERR_INVALID_ARGUMENT, "particle count must be >= 1");
  }
  config->config.particles = particles;
  return QWALL_OK;
}

qwall_status qwall_sweep_config_set_grid(qwall_sweep_config* config,
                                         double t_min, double t_max,
                                         int64_t points,
                                         qwall_grid_scale scale) {
  if (config == nullptr) return null_argument("config");
  if (scale != QWALL_GRID_LINEAR && scale != QWALL_GRID_LOG) {
    return fail(QWALL_ERR_INVALID_ARGUMENT, "unknown grid scale");
  }
  qwall::SweepConfig candidate = config->config;
  candidate.t_min = t_min;
  candidate.t_max = t_max;
  candidate.grid_points = points;
  candidate.scale =
      scale == QWALL_GRID_LOG ? qwall::GridScale::Log : qwall::GridScale::Linear;
  return guarded([&] {
    candidate.validate();
    config->config = candidate;
  });
}

qwall_status qwall_sweep_config_set_tolerance(qwall_sweep_config* config,
                                              double tol) {
  if (config == nullptr) return null_argument("config");
  if (!(tol > 0.0)) {
    return fail(QWALL_ERR_INVALID_ARGUMENT, "tolerance must be > 0");
  }
  config->config.tolerance = tol;
  return QWALL_OK;
}

qwall_status qwall_sweep_config_set_methods(qwall_sweep_config* config,
                                            const qwall_method* methods,
                                            size_t count) {
  if (config == nullptr) return null_argument("config");
  if (methods == nullptr || count == 0) {
    return fail(QWALL_ERR_INVALID_ARGUMENT, "no methods selected");
  }
  return guarded([&] {
    std::vector<qwall::Method> chosen;
    chosen.reserve(count);
    for (size_t i = 0; i < count; ++i) chosen.push_back(to_method(methods[i]));
    config->config.methods = std::move(chosen);
  });
}

qwall_status qwall_sweep_run(const qwall_sweep_config* config,
                             qwall_sweep_result** out) {
  if (config == nullptr) return null_argument("config");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    auto result = std::make_unique<qwall_sweep_result>();
    result->rows = qwall::sweep(config->config);
    *out = result.release();
  });
}

void qwall_sweep_result_destroy(qwall_sweep_result* result) { delete result; }

size_t qwall_sweep_result_size(const qwall_sweep_result* result) {
  return result == nullptr ? 0 : result->rows.size();
}

qwall_status qwall_sweep_result_row(const qwall_sweep_result* result,
                                    size_t index, qwall_sweep_row* out) {
  if (result == nullptr) return null_argument("result");
  if (out == nullptr) return null_argument("out");
  if (index >= result->rows.size()) {
    return fail(QWALL_ERR_INVALID_ARGUMENT, "row index out of range");
  }
  const qwall::SweepRow& row = result->rows[index];
  out->t = row.t;
  out->method = from_method(row.method);
  out->status = from_row_status(row.status);
  copy_optional(row.alpha_plus, &out->has_alpha_plus, &out->alpha_plus);
  copy_optional(row.alpha_minus, &out->has_alpha_minus, &out->alpha_minus);
  copy_optional(row.f_plus, &out->has_f_plus, &out->f_plus);
  copy_optional(row.f_minus, &out->has_f_minus, &out->f_minus);
  copy_optional(row.delta_f, &out->has_delta_f, &out->delta_f);
  return QWALL_OK;
}

const char* qwall_sweep_result_message(const qwall_sweep_result* result,
                                       size_t index) {
  if (result == nullptr || index >= result->rows.size()) return "";
  return result->rows[index].message.c_str();
}

}  // extern "C"
