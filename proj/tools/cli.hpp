#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwall/qwall.h"

namespace qwall::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kCsvHeader =
    "t,method,alpha_plus,alpha_minus,f_plus,f_minus,delta_f,status";

// Sentinel output path meaning standard output.
inline constexpr const char* kStdout = "-";

struct Options {
  std::int64_t particles = 100;
  double t_min = 0.01;
  double t_max = 160.0;
  std::int64_t points = 400;
  qwall_grid_scale scale = QWALL_GRID_LOG;
  std::vector<qwall_method> methods{QWALL_METHOD_NUMERIC};
  double tolerance = 1e-12;
  std::string output = kStdout;
};

struct ParseOutcome {
  std::optional<Options> options;  // empty when the process should exit
  int exit_code = kExitOk;
  std::string message;             // usage error or --help text
};

// args excludes the program name.
ParseOutcome parse_config(const std::vector<std::string>& args);

// Header plus one line per row, doubles printed with 17 significant digits.
void write_csv(std::span<const qwall_sweep_row> rows, std::ostream& out);

// Runs the sweep and writes the CSV. Returns 0 on success, 1 if any row
// failed or the output could not be written.
int run(const Options& options, std::ostream& err);

int main_entry(int argc, char** argv);

}  // namespace qwall::cli
