#include "qubit_entropy/sweep.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "qubit_entropy/entropy.hpp"
#include "qubit_entropy/error.hpp"
#include "qubit_entropy/state.hpp"

#ifndef QE_VERSION
#define QE_VERSION "0.0.0"
#endif

namespace qe {

const char* version() { return QE_VERSION; }

namespace {

[[noreturn]] void config_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::Config, field + ": " + what);
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) {
    config_error(field, "expected a finite number, got '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || v < -1000000000L ||
      v > 1000000000L) {
    config_error(field, "expected an integer, got '" + text + "'");
  }
  return static_cast<int>(v);
}

std::vector<double> parse_list(const std::string& field, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(field, item));
  if (out.empty()) config_error(field, "expected a comma-separated list of numbers");
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  return out;
}

}  // namespace

void apply_config_value(SweepConfig& c, const std::string& raw_key, const std::string& value) {
  std::string key = trim(raw_key);
  for (auto& ch : key)
    if (ch == '_') ch = '-';
  const std::string v = trim(value);
  if (key == "lambda") {
    c.lambda = parse_double(key, v);
  } else if (key == "g") {
    c.g = parse_double(key, v);
  } else if (key == "t-min") {
    c.t_min = parse_double(key, v);
  } else if (key == "t-max") {
    c.t_max = parse_double(key, v);
  } else if (key == "t-steps") {
    c.t_steps = parse_int(key, v);
  } else if (key == "t-scale") {
    if (v == "linear") c.t_scale = TemperatureScale::Linear;
    else if (v == "log") c.t_scale = TemperatureScale::Log;
    else config_error(key, "expected 'linear' or 'log', got '" + v + "'");
  } else if (key == "q") {
    c.q_values = parse_list(key, v);
  } else if (key == "levels-small") {
    c.d_small = parse_int(key, v);
  } else if (key == "levels-big") {
    c.d_big = parse_int(key, v);
  } else if (key == "method") {
    if (v == "closed-form") c.method = TransformMethod::ClosedForm;
    else if (v == "quadrature") c.method = TransformMethod::Quadrature;
    else config_error(key, "expected 'closed-form' or 'quadrature', got '" + v + "'");
  } else if (key == "format") {
    if (v == "csv") c.output_format = OutputFormat::Csv;
    else if (v == "json") c.output_format = OutputFormat::Json;
    else config_error(key, "expected 'csv' or 'json', got '" + v + "'");
  } else if (key == "output") {
    c.output_path = v;
  } else if (key == "quad-order") {
    c.quad_order = parse_int(key, v);
  } else {
    config_error(key.empty() ? std::string("<empty key>") : key, "unknown configuration key");
  }
}

void load_config_file(SweepConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("config", "cannot open '" + path + "': " + std::strerror(errno));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      config_error("config", path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    apply_config_value(config, line.substr(0, eq), line.substr(eq + 1));
  }
}

void SweepConfig::validate() const {
  if (!(lambda > 0.0)) config_error("lambda", "must be positive");
  if (!(t_min > 0.0)) config_error("t-min", "temperature must be positive");
  if (!(t_max > t_min)) config_error("t-max", "must exceed t-min");
  if (t_steps < 2) config_error("t-steps", "need at least 2 temperatures");
  if (q_values.empty()) config_error("q", "need at least one value");
  for (double q : q_values)
    if (!(q > 0.0)) config_error("q", "all values must be positive");
  if (d_small < 2) config_error("levels-small", "must be at least 2");
  if (d_big <= d_small) config_error("levels-big", "must exceed levels-small");
  if (method == TransformMethod::ClosedForm && d_small != 2) {
    config_error("levels-small", "closed-form transform supports only 2 levels per mode");
  }
  if (quad_order < kMinQuadOrder || quad_order > kMaxQuadOrder) {
    config_error("quad-order", "must lie in [" + std::to_string(kMinQuadOrder) + ", " +
                                   std::to_string(kMaxQuadOrder) + "]");
  }
}

std::vector<double> SweepConfig::temperatures() const {
  std::vector<double> ts(t_steps);
  const int last = t_steps - 1;
  for (int i = 0; i <= last; ++i) {
    const double f = double(i) / last;
    ts[i] = t_scale == TemperatureScale::Linear ? t_min + f * (t_max - t_min)
                                                : t_min * std::pow(t_max / t_min, f);
  }
  ts.front() = t_min;
  ts.back() = t_max;
  return ts;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  CircuitParams params;
  params.lambda = config.lambda;
  params.g = config.g;

  NormalModes modes;
  TransformTensor small;
  TransformTensor big;
  try {
    params.validate();
    modes = normal_modes(params, ModeMethod::SmallAngle);
    small = build_transform(params, modes, config.d_small, config.method, config.quad_order);
    big = build_transform(params, modes, config.d_big, TransformMethod::Quadrature,
                          config.quad_order);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("model setup failed: ") + e.what());
  }

  std::vector<SweepRow> rows;
  rows.reserve(config.temperatures().size() * config.q_values.size());
  for (double t : config.temperatures()) {
    double q = 0.0;
    try {
      const DensityMatrix rho = transform_density(thermal_density(modes, t, config.d_small), small);
      const SubspaceValidity validity = subspace_validity(big, modes, t, config.d_small);
      for (double qv : config.q_values) {
        q = qv;
        const EntropyReport r = analyze_bipartite(rho, qv);
        rows.push_back({t, qv, r.s_joint, r.s_1, r.s_2, r.mutual_info, r.subadditivity_margin,
                        validity.mu_block, validity.mu_complement, validity.offdiag_sum});
      }
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "at T=" << format_number(t) << ", q=" << format_number(q) << ": " << e.what();
      throw Error(e.code(), msg.str());
    }
  }
  return rows;
}

std::vector<std::string> provenance(const SweepConfig& c) {
  std::vector<std::string> lines;
  lines.push_back(std::string("# qubit-entropy ") + version());
  lines.push_back("# lambda=" + format_number(c.lambda));
  lines.push_back("# g=" + format_number(c.g));
  lines.push_back("# t-min=" + format_number(c.t_min));
  lines.push_back("# t-max=" + format_number(c.t_max));
  lines.push_back("# t-steps=" + std::to_string(c.t_steps));
  lines.push_back(std::string("# t-scale=") +
                  (c.t_scale == TemperatureScale::Linear ? "linear" : "log"));
  lines.push_back("# q=" + join_numbers(c.q_values));
  lines.push_back("# levels-small=" + std::to_string(c.d_small));
  lines.push_back("# levels-big=" + std::to_string(c.d_big));
  lines.push_back(std::string("# method=") + to_string(c.method));
  lines.push_back("# quad-order=" + std::to_string(c.quad_order));
  return lines;
}

std::string format_csv(const std::vector<SweepRow>& rows, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& line : comments) out += line + '\n';
  out += kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    const double fields[] = {r.temperature, r.q,      r.s_joint,  r.s_1,           r.s_2,
                             r.mutual_info, r.margin, r.mu_block, r.mu_complement, r.offdiag_sum};
    for (std::size_t i = 0; i < std::size(fields); ++i) {
      if (i) out += ',';
      out += format_number(fields[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_json(const std::vector<SweepRow>& rows) {
  auto rounded = [](double v) { return std::strtod(format_number(v).c_str(), nullptr); };
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj;
    obj["T"] = rounded(r.temperature);
    obj["q"] = rounded(r.q);
    obj["S_joint"] = rounded(r.s_joint);
    obj["S_1"] = rounded(r.s_1);
    obj["S_2"] = rounded(r.s_2);
    obj["I"] = rounded(r.mutual_info);
    obj["margin"] = rounded(r.margin);
    obj["mu_I"] = rounded(r.mu_block);
    obj["mu_II"] = rounded(r.mu_complement);
    obj["offdiag_sum"] = rounded(r.offdiag_sum);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + '\n';
}

void emit(const std::vector<SweepRow>& rows, OutputFormat format, const std::string& path,
          const std::vector<std::string>& comments) {
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "nothing to emit: no rows");
  const std::string text = format == OutputFormat::Csv ? format_csv(rows, comments)
                                                       : format_json(rows);
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, path + ": " + std::strerror(errno));
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::Io, path + ": " + std::strerror(errno));
}

}  // namespace qe
