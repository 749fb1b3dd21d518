#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace qwall::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_field(std::ostream& out, int present, double value) {
  out << ',';
  if (present) out << format_double(value);
}

struct ConfigDeleter {
  void operator()(qwall_sweep_config* c) const { qwall_sweep_config_destroy(c); }
};
struct ResultDeleter {
  void operator()(qwall_sweep_result* r) const { qwall_sweep_result_destroy(r); }
};

}  // namespace

ParseOutcome parse_config(const std::vector<std::string>& args) {
  Options options;
  std::string scale = "log";
  std::string methods = "numeric";

  CLI::App app{"Net force on a partition wall between Neumann and Dirichlet "
               "half-wells of ideal bosons",
               "qwall"};
  app.add_option("--n-particles", options.particles,
                 "Bosons in each half-well")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--t-min", options.t_min, "Lowest dimensionless temperature")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--t-max", options.t_max, "Highest dimensionless temperature")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--points", options.points, "Number of grid points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--scale", scale, "Grid spacing: linear or log")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  app.add_option("--methods", methods,
                 "Comma-separated subset of numeric,low-t,linear,"
                 "semi-analytic,high-t")
      ->capture_default_str();
  app.add_option("--tol", options.tolerance,
                 "Relative tolerance of the particle-number constraint")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--output", options.output, "CSV destination, - for stdout")
      ->capture_default_str();

  ParseOutcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.exit_code = kExitOk;
    outcome.message = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kExitUsage;
    outcome.message = e.what();
    return outcome;
  }

  if (options.t_min > options.t_max) {
    outcome.exit_code = kExitUsage;
    outcome.message = "--t-min must not exceed --t-max";
    return outcome;
  }

  options.scale = scale == "log" ? QWALL_GRID_LOG : QWALL_GRID_LINEAR;
  options.methods.clear();
  for (const std::string& name : split_commas(methods)) {
    qwall_method method{};
    if (qwall_method_from_name(name.c_str(), &method) != QWALL_OK) {
      outcome.exit_code = kExitUsage;
      outcome.message = "--methods: unknown method '" + name + "'";
      return outcome;
    }
    options.methods.push_back(method);
  }
  if (options.methods.empty()) {
    outcome.exit_code = kExitUsage;
    outcome.message = "--methods: at least one method is required";
    return outcome;
  }

  outcome.options = std::move(options);
  return outcome;
}

void write_csv(std::span<const qwall_sweep_row> rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const qwall_sweep_row& row : rows) {
    out << format_double(row.t) << ',' << qwall_method_name(row.method);
    write_field(out, row.has_alpha_plus, row.alpha_plus);
    write_field(out, row.has_alpha_minus, row.alpha_minus);
    write_field(out, row.has_f_plus, row.f_plus);
    write_field(out, row.has_f_minus, row.f_minus);
    write_field(out, row.has_delta_f, row.delta_f);
    out << ',' << qwall_row_status_name(row.status) << '\n';
  }
}

int run(const Options& options, std::ostream& err) {
  std::unique_ptr<qwall_sweep_config, ConfigDeleter> config(
      qwall_sweep_config_create());
  if (!config) {
    err << "qwall: " << qwall_last_error() << '\n';
    return kExitFailure;
  }

  const auto check = [&](qwall_status status) {
    if (status != QWALL_OK) {
      err << "qwall: " << qwall_last_error() << '\n';
      return false;
    }
    return true;
  };
  if (!check(qwall_sweep_config_set_particles(config.get(), options.particles)) ||
      !check(qwall_sweep_config_set_grid(config.get(), options.t_min,
                                         options.t_max, options.points,
                                         options.scale)) ||
      !check(qwall_sweep_config_set_tolerance(config.get(), options.tolerance)) ||
      !check(qwall_sweep_config_set_methods(config.get(), options.methods.data(),
                                            options.methods.size()))) {
    return kExitUsage;
  }

  qwall_sweep_result* raw = nullptr;
  if (!check(qwall_sweep_run(config.get(), &raw))) return kExitFailure;
  std::unique_ptr<qwall_sweep_result, ResultDeleter> result(raw);

  const std::size_t count = qwall_sweep_result_size(result.get());
  std::vector<qwall_sweep_row> rows(count);
  bool any_failed = false;
  for (std::size_t i = 0; i < count; ++i) {
    qwall_sweep_result_row(result.get(), i, &rows[i]);
    if (rows[i].status == QWALL_ROW_ERROR) {
      any_failed = true;
      err << "qwall: t=" << format_double(rows[i].t) << " "
          << qwall_method_name(rows[i].method) << ": "
          << qwall_sweep_result_message(result.get(), i) << '\n';
    }
  }

  if (options.output == kStdout) {
    write_csv(rows, std::cout);
    std::cout.flush();
    if (!std::cout) {
      err << "qwall: failed writing to standard output\n";
      return kExitFailure;
    }
  } else {
    std::ofstream file(options.output, std::ios::binary);
    if (!file) {
      err << "qwall: cannot open '" << options.output << "' for writing\n";
      return kExitFailure;
    }
    write_csv(rows, file);
    file.close();
    if (!file) {
      err << "qwall: failed writing '" << options.output << "'\n";
      return kExitFailure;
    }
  }
  return any_failed ? kExitFailure : kExitOk;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  const ParseOutcome parsed = parse_config(args);
  if (!parsed.options) {
    if (parsed.exit_code == kExitOk) {
      std::cout << parsed.message;
    } else {
      std::cerr << "qwall: " << parsed.message << "\n"
                << "Run with --help for usage.\n";
    }
    return parsed.exit_code;
  }
  return run(*parsed.options, std::cerr);
}

}  // namespace qwall::cli
