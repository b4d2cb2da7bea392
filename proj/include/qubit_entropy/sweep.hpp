#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qubit_entropy/quadrature.hpp"
#include "qubit_entropy/transform.hpp"

namespace qe {

enum class TemperatureScale { Linear, Log };
enum class OutputFormat { Csv, Json };

struct SweepConfig {
  double lambda = 1.5;
  double g = 0.1;
  double t_min = 0.01;
  double t_max = 0.5;
  int t_steps = 50;
  TemperatureScale t_scale = TemperatureScale::Linear;
  std::vector<double> q_values{0.5, 0.8, 1.0, 1.5, 2.0};
  int d_small = 2;
  int d_big = 6;
  TransformMethod method = TransformMethod::ClosedForm;
  std::string output_path;  ///< empty writes to stdout
  OutputFormat output_format = OutputFormat::Csv;
  int quad_order = kDefaultQuadOrder;

  /// Throws Error(Config) naming the first offending field.
  void validate() const;

  /// Grid in ascending order; endpoints are exactly t_min and t_max.
  std::vector<double> temperatures() const;
};

/// Sets one field from its textual key (flag name without dashes, e.g.
/// "t-min", or the underscore form). Throws Error(Config) naming the key.
void apply_config_value(SweepConfig& config, const std::string& key, const std::string& value);

/// Flat `key = value` file; '#' starts a comment. Later keys win.
void load_config_file(SweepConfig& config, const std::string& path);

struct SweepRow {
  double temperature;
  double q;
  double s_joint;
  double s_1;
  double s_2;
  double mutual_info;
  double margin;
  double mu_block;
  double mu_complement;
  double offdiag_sum;
};

inline constexpr const char* kCsvHeader = "T,q,S_joint,S_1,S_2,I,margin,mu_I,mu_II,offdiag_sum";

/// One row per (T, q), T-major. Pipeline errors are rethrown with the
/// failing grid point in the message.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// '#'-prefixed lines recording tool version and the effective config.
std::vector<std::string> provenance(const SweepConfig& config);

std::string format_csv(const std::vector<SweepRow>& rows,
                       const std::vector<std::string>& comments = {});
std::string format_json(const std::vector<SweepRow>& rows);

/// Writes rows to `path` (stdout when empty). CSV gets the comment lines
/// first; JSON is a bare array and carries none.
void emit(const std::vector<SweepRow>& rows, OutputFormat format, const std::string& path,
          const std::vector<std::string>& comments = {});

const char* version();

}  // namespace qe
