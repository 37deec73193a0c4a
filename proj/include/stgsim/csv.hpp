#pragma once

#include <string>
#include <vector>

namespace stgsim {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int cols() const { return static_cast<int>(header.size()); }
  int size() const { return static_cast<int>(rows.size()); }
};

// Reads a comma-separated file with a header row. Rejects ragged rows,
// reporting the 1-based line number.
CsvTable read_csv(const std::string& path);

// Strict double parse; rejects NaN/inf and trailing garbage. `context`
// names the cell in error messages (e.g. "speeds.csv row 3 col 2").
double parse_double(const std::string& cell, const std::string& context);

long parse_long(const std::string& cell, const std::string& context);

// Shortest round-trip representation, locale independent.
std::string fmt_double(double v);

}  // namespace stgsim
