#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "golden.hpp"
#include "json.hpp"
#include "qubit_entropy/cli.hpp"
#include "qubit_entropy/error.hpp"
#include "qubit_entropy/sweep.hpp"

using namespace qe;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "qubit_entropy_test_sweep";
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string config_error_field(const std::vector<std::string>& args) {
  try {
    parse_config(args);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Config);
    return e.what();
  }
  FAIL("expected a config error");
  return {};
}

int run_tool(const std::string& args) {
  const std::string command = std::string("\"") + QE_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

SweepConfig small_config() {
  SweepConfig c;
  c.t_steps = 6;
  c.q_values = {0.5, 1.0, 2.0};
  c.d_big = 4;
  return c;
}

}  // namespace

TEST_CASE("parse_config defaults and flags") {
  const auto defaults = parse_config({});
  CHECK(defaults.lambda == 1.5);
  CHECK(defaults.g == 0.1);
  CHECK(defaults.t_min == 0.01);
  CHECK(defaults.t_max == 0.5);
  CHECK(defaults.t_steps == 50);
  CHECK(defaults.q_values == std::vector<double>{0.5, 0.8, 1.0, 1.5, 2.0});
  CHECK(defaults.d_small == 2);
  CHECK(defaults.d_big == 6);
  CHECK(defaults.method == TransformMethod::ClosedForm);
  CHECK(defaults.output_format == OutputFormat::Csv);

  const auto c = parse_config({"--g", "0", "--lambda", "2"});
  CHECK(c.g == 0.0);
  CHECK(c.lambda == 2.0);

  const auto d = parse_config({"--t-scale", "log", "--method", "quadrature", "--format", "json",
                               "--levels-big", "5", "--output", "x.json", "--t-steps", "7"});
  CHECK(d.t_scale == TemperatureScale::Log);
  CHECK(d.method == TransformMethod::Quadrature);
  CHECK(d.output_format == OutputFormat::Json);
  CHECK(d.d_big == 5);
  CHECK(d.output_path == "x.json");
  CHECK(d.t_steps == 7);
}

TEST_CASE("config file, flag and environment precedence") {
  const auto path = scratch_dir() / "sweep.conf";
  write_file(path, "# comment\nlambda = 1.8\nq = 0.5, 0.7\nt_steps = 9\n\nquad-order = 32\n");

  const auto from_file = parse_config({"--config", path.string()});
  CHECK(from_file.lambda == 1.8);
  CHECK(from_file.q_values == std::vector<double>{0.5, 0.7});
  CHECK(from_file.t_steps == 9);
  CHECK(from_file.quad_order == 32);

  const auto overridden = parse_config({"--config", path.string(), "--q", "1.0,2.0"});
  CHECK(overridden.q_values == std::vector<double>{1.0, 2.0});
  CHECK(overridden.lambda == 1.8);

  const auto env = parse_config({"--config", path.string()}, std::string("128"));
  CHECK(env.quad_order == 128);
  CHECK_THROWS_AS(parse_config({}, std::string("8")), Error);
  CHECK_THROWS_AS(parse_config({}, std::string("abc")), Error);

  write_file(path, "bogus = 1\n");
  CHECK(config_error_field({"--config", path.string()}).find("bogus") != std::string::npos);
  write_file(path, "no equals sign\n");
  CHECK_THROWS_AS(parse_config({"--config", path.string()}), Error);
  CHECK_THROWS_AS(parse_config({"--config", (scratch_dir() / "missing.conf").string()}), Error);
}

TEST_CASE("validation names the offending field") {
  CHECK(config_error_field({"--t-min", "0"}).find("t-min") != std::string::npos);
  CHECK(config_error_field({"--t-max", "0.005"}).find("t-max") != std::string::npos);
  CHECK(config_error_field({"--t-steps", "1"}).find("t-steps") != std::string::npos);
  CHECK(config_error_field({"--q", "1,-2"}).find("q: ") != std::string::npos);
  CHECK(config_error_field({"--levels-big", "2"}).find("levels-big") != std::string::npos);
  CHECK(config_error_field({"--levels-small", "3"}).find("levels-small") != std::string::npos);
  CHECK(config_error_field({"--method", "magic"}).find("method") != std::string::npos);
  CHECK(config_error_field({"--lambda", "abc"}).find("lambda") != std::string::npos);
  CHECK(config_error_field({"--frobnicate", "1"}).size() > 0);
}

TEST_CASE("temperature grids") {
  SweepConfig c;
  const auto linear = c.temperatures();
  REQUIRE(linear.size() == 50);
  CHECK(linear.front() == 0.01);
  CHECK(linear.back() == 0.5);
  c.t_scale = TemperatureScale::Log;
  const auto log = c.temperatures();
  CHECK(log.front() == 0.01);
  CHECK(log.back() == 0.5);
  CHECK(log[1] / log[0] == doctest::Approx(log[2] / log[1]).epsilon(1e-12));
}

TEST_CASE("emit formats") {
  auto config = small_config();
  config.t_steps = 2;
  config.q_values = {1.0};
  auto rows = run_sweep(config);
  REQUIRE(rows.size() == 2);
  rows.resize(1);

  const auto csv = format_csv(rows);
  const auto csv_lines = lines_of(csv);
  REQUIRE(csv_lines.size() == 2);
  CHECK(csv_lines[0] == kCsvHeader);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');

  const auto path = scratch_dir() / "one.csv";
  emit(rows, OutputFormat::Csv, path.string());
  CHECK(read_file(path) == csv);

  const auto full = run_sweep(small_config());
  const auto json = nlohmann::json::parse(format_json(full));
  REQUIRE(json.is_array());
  CHECK(json.size() == 6 * 3);
  for (const char* key : {"T", "q", "S_joint", "S_1", "S_2", "I", "margin", "mu_I", "mu_II", "offdiag_sum"})
    CHECK(json[0].contains(key));
  CHECK(json[3]["q"].get<double>() == 0.5);

  try {
    emit(rows, OutputFormat::Csv, (scratch_dir() / "no_such_dir" / "x.csv").string());
    FAIL("expected an I/O error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
    CHECK(std::string(e.what()).find("no_such_dir") != std::string::npos);
  }
}

TEST_CASE("sweep rows are T-major and deterministic") {
  const auto config = small_config();
  const auto rows = run_sweep(config);
  REQUIRE(rows.size() == 18);
  CHECK(rows[0].temperature == rows[2].temperature);
  CHECK(rows[0].q == 0.5);
  CHECK(rows[2].q == 2.0);
  CHECK(rows[3].temperature > rows[0].temperature);

  const auto comments = provenance(config);
  CHECK(comments.front().rfind("# qubit-entropy ", 0) == 0);
  CHECK(format_csv(rows, comments) == format_csv(run_sweep(config), provenance(config)));
}

TEST_CASE("zero coupling sweep: no von Neumann mutual information") {
  auto config = small_config();
  config.g = 0.0;
  for (const auto& row : run_sweep(config)) {
    CHECK(row.offdiag_sum <= 1e-10);
    if (row.q == 1.0) {
      CHECK(std::abs(row.mutual_info) <= 1e-10);
    } else {
      // Tsallis entropies of product states are pseudo-additive:
      // S_12 = S_1 + S_2 + (1 - q) S_1 S_2.
      const double expected = (row.q - 1.0) * row.s_1 * row.s_2;
      CHECK(std::abs(row.margin - expected) <= 1e-12 + 1e-9 * std::abs(expected));
    }
  }
}

TEST_CASE("quadrature and closed-form sweeps agree") {
  auto closed = small_config();
  auto quad = closed;
  quad.method = TransformMethod::Quadrature;
  const auto a = run_sweep(closed);
  const auto b = run_sweep(quad);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::abs(a[i].s_joint - b[i].s_joint) <= 1e-6);
    CHECK(std::abs(a[i].s_1 - b[i].s_1) <= 1e-6);
    CHECK(std::abs(a[i].s_2 - b[i].s_2) <= 1e-6);
    CHECK(std::abs(a[i].mutual_info - b[i].mutual_info) <= 1e-6);
    CHECK(std::abs(a[i].mu_block - b[i].mu_block) <= 1e-6);
    CHECK(std::abs(a[i].offdiag_sum - b[i].offdiag_sum) <= 1e-6);
  }
}

TEST_CASE("pipeline failures identify the grid point") {
  SweepConfig config = small_config();
  config.lambda = 1.0;
  CHECK_THROWS_AS(run_sweep(config), Error);
  config.lambda = 1.5;
  config.g = 1.4;
  CHECK_THROWS_AS(run_sweep(config), Error);
}

TEST_CASE("command-line exit codes") {
  const auto out = scratch_dir() / "cli.csv";
  CHECK(run_tool("--t-steps 3 --q 1 --levels-big 3 --output \"" + out.string() + "\"") == kExitOk);
  const auto lines = lines_of(read_file(out));
  REQUIRE(lines.size() > 3);
  CHECK(lines[0].rfind("# qubit-entropy", 0) == 0);
  CHECK(lines.back().rfind("0.5,1,", 0) == 0);

  CHECK(run_tool("--help") == kExitOk);
  CHECK(run_tool("--version") == kExitOk);
  CHECK(run_tool("--t-min 0") == kExitConfig);
  CHECK(run_tool("--not-a-flag 3") == kExitConfig);
  CHECK(run_tool("--lambda 1 --t-steps 2") == kExitPipeline);
  CHECK(run_tool("--g 1.4 --t-steps 2") == kExitPipeline);
  CHECK(run_tool("--t-steps 2 --output \"" + (scratch_dir() / "missing" / "x.csv").string() + "\"") ==
        kExitPipeline);
}

TEST_CASE("default sweep matches the golden file") {
  const auto golden = test::parse_sweep_csv(test::read_text(test::golden_path("default_sweep.csv")));
  REQUIRE(golden.rows.size() == 250);
  const SweepConfig config;
  const auto actual = test::parse_sweep_csv(format_csv(run_sweep(config), provenance(config)));
  CHECK(test::golden_mismatch(actual, golden) <= 1.0);
}
