#include "qubit_entropy/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "qubit_entropy/error.hpp"

namespace qe {

namespace {

// Flag name (without dashes) -> config key understood by apply_config_value.
const char* const kValueFlags[] = {"lambda",       "g",          "t-min",  "t-max",  "t-steps",
                                   "t-scale",      "q",          "levels-small",     "levels-big",
                                   "method",       "format",     "output"};

struct CliSpec {
  CLI::App app{"Tsallis and von Neumann entropies of two coupled LC oscillators", "qubit-entropy"};
  std::map<std::string, std::string> values;
  std::string config_path;
};

void configure(CliSpec& spec) {
  auto& app = spec.app;
  app.set_version_flag("--version", version());
  app.add_option("--config", spec.config_path, "flat key = value file; flags override it");
  const std::map<std::string, std::string> help = {
      {"lambda", "frequency ratio omega2/omega1 (default 1.5)"},
      {"g", "coupling constant (default 0.1)"},
      {"t-min", "lowest temperature, units of omega1 (default 0.01)"},
      {"t-max", "highest temperature (default 0.5)"},
      {"t-steps", "number of temperatures (default 50)"},
      {"t-scale", "linear | log (default linear)"},
      {"q", "comma-separated Tsallis q values (default 0.5,0.8,1,1.5,2)"},
      {"levels-small", "levels per mode of the analysed state (default 2)"},
      {"levels-big", "levels per mode of the validity reference (default 6)"},
      {"method", "closed-form | quadrature (default closed-form)"},
      {"format", "csv | json (default csv)"},
      {"output", "output file (default stdout)"},
  };
  for (const char* name : kValueFlags) {
    const std::string key = name;
    app.add_option_function<std::string>(
        "--" + key, [&spec, key](const std::string& v) { spec.values[key] = v; }, help.at(key));
  }
}

}  // namespace

namespace {

SweepConfig resolve(const CliSpec& spec, const std::optional<std::string>& quad_order_env) {
  SweepConfig config;
  if (!spec.config_path.empty()) load_config_file(config, spec.config_path);
  for (const auto& [key, value] : spec.values) apply_config_value(config, key, value);
  if (quad_order_env) {
    try {
      apply_config_value(config, "quad-order", *quad_order_env);
    } catch (const Error& e) {
      throw Error(ErrorCode::Config, std::string(kQuadOrderEnv) + " -> " + e.what());
    }
  }
  config.validate();
  return config;
}

}  // namespace

SweepConfig parse_config(const std::vector<std::string>& args,
                         const std::optional<std::string>& quad_order_env) {
  CliSpec spec;
  configure(spec);
  try {
    spec.app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::Config, std::string("arguments: ") + e.what());
  }
  return resolve(spec, quad_order_env);
}

int run_cli(int argc, const char* const* argv) {
  std::optional<std::string> env;
  if (const char* raw = std::getenv(kQuadOrderEnv)) env = raw;

  CliSpec spec;
  configure(spec);
  SweepConfig config;
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    spec.app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::Success& ok) {
    return spec.app.exit(ok);  // --help, --version
  } catch (const CLI::ParseError& e) {
    std::cerr << "qubit-entropy: arguments: " << e.what() << "\n";
    return kExitConfig;
  }
  try {
    config = resolve(spec, env);
  } catch (const Error& e) {
    std::cerr << "qubit-entropy: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    const auto rows = run_sweep(config);
    emit(rows, config.output_format, config.output_path, provenance(config));
  } catch (const Error& e) {
    std::cerr << "qubit-entropy: " << e.what() << "\n";
    return e.code() == ErrorCode::Config ? kExitConfig : kExitPipeline;
  } catch (const std::exception& e) {
    std::cerr << "qubit-entropy: " << e.what() << "\n";
    return kExitPipeline;
  }
  return kExitOk;
}

}  // namespace qe
