#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwall/occupancy.hpp"

namespace qwall {

// Declaration order is the row order within one temperature.
enum class Method { Numeric, LowT, Linear, SemiAnalytic, HighT };

enum class GridScale { Linear, Log };

enum class RowStatus { Ok, OutOfRange, Error };

std::string_view to_string(Method method);
std::string_view to_string(RowStatus status);
std::optional<Method> parse_method(std::string_view name);

struct SweepConfig {
  std::int64_t particles = 100;
  double t_min = 0.01;
  double t_max = 160.0;
  std::int64_t grid_points = 400;
  GridScale scale = GridScale::Log;
  std::vector<Method> methods{Method::Numeric};
  double tolerance = kDefaultSolverTol;

  // Throws InvalidArgument on an empty grid, empty method set,
  // t_min <= 0, t_min > t_max, N < 1 or tol <= 0.
  void validate() const;
};

// One (t, method) result. Per-well fields are set only by Numeric and
// SemiAnalytic; every data field is empty on an Error row.
struct SweepRow {
  double t = 0.0;
  Method method = Method::Numeric;
  std::optional<double> alpha_plus;
  std::optional<double> alpha_minus;
  std::optional<double> f_plus;
  std::optional<double> f_minus;
  std::optional<double> delta_f;
  RowStatus status = RowStatus::Ok;
  std::string message;
};

std::vector<double> temperature_grid(const SweepConfig& config);

// Evaluates one method at one temperature. Never throws for per-point
// failures; they become Error rows.
SweepRow evaluate(Method method, std::int64_t particles, double t,
                  double tolerance);

// Rows ordered by grid index, then by Method declaration order. Duplicate
// methods are evaluated once. Points are evaluated in parallel; the result
// does not depend on scheduling.
std::vector<SweepRow> sweep(const SweepConfig& config);

}  // namespace qwall
