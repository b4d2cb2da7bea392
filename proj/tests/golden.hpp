#pragma once

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qe::test {

struct CsvTable {
  std::string header;
  std::vector<std::vector<double>> rows;
};

/// Parses sweep CSV text, skipping '#' comment lines.
inline CsvTable parse_sweep_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    if (table.header.empty()) {
      table.header = line;
      continue;
    }
    std::vector<double> row;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) row.push_back(std::strtod(cell.c_str(), nullptr));
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline std::string golden_path(const std::string& name) { return std::string(QE_GOLDEN_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Largest mismatch between two tables, scaled by 1e-12 + 1e-9 |golden|;
/// returns INFINITY on a shape or header mismatch. <= 1 means equal.
inline double golden_mismatch(const CsvTable& actual, const CsvTable& golden) {
  if (actual.header != golden.header || actual.rows.size() != golden.rows.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t r = 0; r < golden.rows.size(); ++r) {
    if (actual.rows[r].size() != golden.rows[r].size()) return INFINITY;
    for (std::size_t c = 0; c < golden.rows[r].size(); ++c) {
      const double g = golden.rows[r][c];
      worst = std::max(worst, std::abs(actual.rows[r][c] - g) / (1e-12 + 1e-9 * std::abs(g)));
    }
  }
  return worst;
}

}  // namespace qe::test
