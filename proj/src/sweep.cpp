#include "qwall/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "qwall/approx.hpp"
#include "qwall/error.hpp"
#include "qwall/force.hpp"

namespace qwall {

namespace {

struct MethodName {
  Method method;
  std::string_view name;
};

constexpr MethodName kMethodNames[] = {
    {Method::Numeric, "numeric"},
    {Method::LowT, "low-t"},
    {Method::Linear, "linear"},
    {Method::SemiAnalytic, "semi-analytic"},
    {Method::HighT, "high-t"},
};

}  // namespace

std::string_view to_string(Method method) {
  for (const auto& entry : kMethodNames) {
    if (entry.method == method) return entry.name;
  }
  return "unknown";
}

std::string_view to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Ok:
      return "ok";
    case RowStatus::OutOfRange:
      return "out-of-range";
    case RowStatus::Error:
      return "error";
  }
  return "error";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& entry : kMethodNames) {
    if (entry.name == name) return entry.method;
  }
  return std::nullopt;
}

void SweepConfig::validate() const {
  if (particles < 1) throw InvalidArgument("particle count must be >= 1");
  if (grid_points < 1) throw InvalidArgument("temperature grid is empty");
  if (!(t_min > 0.0) || !std::isfinite(t_min)) {
    throw InvalidArgument("t_min must be finite and > 0");
  }
  if (!(t_max >= t_min) || !std::isfinite(t_max)) {
    throw InvalidArgument("t_max must be finite and >= t_min");
  }
  if (methods.empty()) throw InvalidArgument("no methods selected");
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be > 0");
}

std::vector<double> temperature_grid(const SweepConfig& config) {
  config.validate();
  const auto count = static_cast<std::size_t>(config.grid_points);
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = config.t_min;
    return grid;
  }
  const double span = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = static_cast<double>(i) / span;
    grid[i] = config.scale == GridScale::Log
                  ? config.t_min * std::pow(config.t_max / config.t_min, u)
                  : config.t_min + (config.t_max - config.t_min) * u;
  }
  grid.front() = config.t_min;
  grid.back() = config.t_max;
  return grid;
}

SweepRow evaluate(Method method, std::int64_t particles, double t,
                  double tolerance) {
  SweepRow row;
  row.t = t;
  row.method = method;
  try {
    switch (method) {
      case Method::Numeric: {
        const NetForceDetail detail =
            net_force_detail(ThermoPoint(particles, t), tolerance);
        row.alpha_plus = detail.alpha_plus.alpha;
        row.alpha_minus = detail.alpha_minus.alpha;
        row.f_plus = detail.forces.f_plus;
        row.f_minus = detail.forces.f_minus;
        row.delta_f = detail.forces.delta_f;
        break;
      }
      case Method::LowT:
        row.delta_f = delta_f_low_t(particles, t);
        break;
      case Method::Linear: {
        const LinearEstimate estimate = delta_f_linear(particles, t);
        row.delta_f = estimate.delta_f;
        if (!estimate.in_range) row.status = RowStatus::OutOfRange;
        break;
      }
      case Method::SemiAnalytic: {
        const SemiAnalyticResult result = semi_analytic(particles, t);
        row.alpha_plus = result.alpha_plus;
        row.alpha_minus = result.alpha_minus;
        row.f_plus = result.f_plus;
        row.f_minus = result.f_minus;
        row.delta_f = result.delta_f;
        break;
      }
      case Method::HighT:
        row.delta_f = delta_f_high_t(particles, t);
        break;
    }
  } catch (const std::exception& e) {
    const double kept_t = row.t;
    row = SweepRow{};
    row.t = kept_t;
    row.method = method;
    row.status = RowStatus::Error;
    row.message = e.what();
  }
  return row;
}

std::vector<SweepRow> sweep(const SweepConfig& config) {
  const std::vector<double> grid = temperature_grid(config);

  std::vector<Method> methods = config.methods;
  std::sort(methods.begin(), methods.end());
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

  const std::size_t total = grid.size() * methods.size();
  std::vector<SweepRow> rows(total);

  // Each slot is written by exactly one worker, so the output is identical
  // to a sequential run.
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const double t = grid[i / methods.size()];
      rows[i] = evaluate(methods[i % methods.size()], config.particles, t,
                         config.tolerance);
    }
  };
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const auto workers =
      static_cast<unsigned>(std::min<std::size_t>(hardware, total));
  std::vector<std::jthread> pool;
  pool.reserve(workers > 0 ? workers - 1 : 0);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();
  return rows;
}

}  // namespace qwall
