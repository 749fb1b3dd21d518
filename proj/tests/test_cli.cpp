#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cli.hpp"

namespace fs = std::filesystem;
using qwall::cli::parse_config;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Runs the installed binary with stdout/stderr captured into files.
struct Run {
  int exit_code = -1;
  std::string out;
  std::string err;
};

Run run_binary(const std::string& args) {
  const fs::path dir = fs::temp_directory_path() / "qwall_cli_test";
  fs::create_directories(dir);
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string command = std::string("\"") + QWALL_CLI_PATH + "\" " + args + " > \"" +
                              out.string() + "\" 2> \"" + err.string() + "\"";
  const int raw = std::system(command.c_str());
  Run run;
  run.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  run.out = slurp(out);
  run.err = slurp(err);
  return run;
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

std::size_t line_count(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("parse_config: defaults") {
  const auto parsed = parse_config({});
  REQUIRE(parsed.options);
  CHECK(parsed.options->particles == 100);
  CHECK(parsed.options->t_min == 0.01);
  CHECK(parsed.options->t_max == 160.0);
  CHECK(parsed.options->points == 400);
  CHECK(parsed.options->scale == QWALL_GRID_LOG);
  CHECK(parsed.options->methods == std::vector<qwall_method>{QWALL_METHOD_NUMERIC});
  CHECK(parsed.options->output == "-");
}

TEST_CASE("parse_config: full method set") {
  const auto parsed =
      parse_config({"--n-particles", "100", "--t-min", "0.01", "--t-max", "160", "--points",
                    "400", "--scale", "log", "--methods", "numeric,low-t,linear", "--tol",
                    "1e-10", "--output", "out.csv"});
  REQUIRE(parsed.options);
  CHECK(parsed.options->methods ==
        std::vector<qwall_method>{QWALL_METHOD_NUMERIC, QWALL_METHOD_LOW_T,
                                  QWALL_METHOD_LINEAR});
  CHECK(parsed.options->tolerance == 1e-10);
  CHECK(parsed.options->output == "out.csv");
}

TEST_CASE("parse_config: usage errors exit 2") {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{"--t-min", "-1"},
                                             {"--n-particles", "0"},
                                             {"--t-min", "5", "--t-max", "1"},
                                             {"--methods", "numeric,bogus"},
                                             {"--methods", ""},
                                             {"--scale", "cubic"},
                                             {"--unknown"},
                                             {"--points", "ten"}}) {
    const auto parsed = parse_config(args);
    CHECK_FALSE(parsed.options);
    CHECK(parsed.exit_code == qwall::cli::kExitUsage);
    CHECK_FALSE(parsed.message.empty());
  }
  const auto help = parse_config({"--help"});
  CHECK_FALSE(help.options);
  CHECK(help.exit_code == qwall::cli::kExitOk);
  CHECK(help.message.find("--n-particles") != std::string::npos);
}

TEST_CASE("write_csv: header and empty fields") {
  qwall_sweep_row full{};
  full.t = 1.0;
  full.method = QWALL_METHOD_NUMERIC;
  full.status = QWALL_ROW_OK;
  full.has_alpha_plus = full.has_alpha_minus = full.has_f_plus = full.has_f_minus =
      full.has_delta_f = 1;
  full.alpha_plus = -0.25;
  full.alpha_minus = -1.0;
  full.f_plus = 0.5;
  full.f_minus = 2.0;
  full.delta_f = 1.5;

  qwall_sweep_row partial{};
  partial.t = 0.1;
  partial.method = QWALL_METHOD_LINEAR;
  partial.status = QWALL_ROW_OUT_OF_RANGE;
  partial.has_delta_f = 1;
  partial.delta_f = 0.1;

  qwall_sweep_row failed{};
  failed.t = 2.0;
  failed.method = QWALL_METHOD_SEMI_ANALYTIC;
  failed.status = QWALL_ROW_ERROR;

  const qwall_sweep_row rows[] = {full, partial, failed};
  std::ostringstream out;
  qwall::cli::write_csv(rows, out);
  CHECK(out.str() ==
        "t,method,alpha_plus,alpha_minus,f_plus,f_minus,delta_f,status\n"
        "1,numeric,-0.25,-1,0.5,2,1.5,ok\n"
        "0.10000000000000001,linear,,,,,0.10000000000000001,out-of-range\n"
        "2,semi-analytic,,,,,,error\n");
}

TEST_CASE("binary: default sweep") {
  const Run first = run_binary("");
  CHECK(first.exit_code == 0);
  CHECK(first_line(first.out) == qwall::cli::kCsvHeader);
  CHECK(line_count(first.out) == 401);
  CHECK(first.out.find(",error") == std::string::npos);

  const Run second = run_binary("");
  CHECK(first.out == second.out);
}

TEST_CASE("binary: usage and failure exit codes") {
  const Run unknown = run_binary("--no-such-flag");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.out.empty());
  CHECK_FALSE(unknown.err.empty());

  CHECK(run_binary("--t-min -1").exit_code == 2);
  CHECK(run_binary("--help").exit_code == 0);

  const Run unwritable = run_binary("--points 2 --output /nonexistent-dir/out.csv");
  CHECK(unwritable.exit_code == 1);
  CHECK(unwritable.err.find("cannot open") != std::string::npos);

  const Run failing = run_binary("--t-min 1e16 --t-max 1e16 --points 1");
  CHECK(failing.exit_code == 1);
  CHECK(failing.out.find(",numeric,,,,,,error") != std::string::npos);
  CHECK_FALSE(failing.err.empty());
}

TEST_CASE("binary: file output matches stdout") {
  const fs::path path = fs::temp_directory_path() / "qwall_cli_test" / "sweep.csv";
  const Run to_file =
      run_binary("--points 5 --methods numeric,high-t --output \"" + path.string() + "\"");
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  const Run to_stdout = run_binary("--points 5 --methods numeric,high-t");
  CHECK(slurp(path) == to_stdout.out);
  CHECK(line_count(to_stdout.out) == 11);
}
