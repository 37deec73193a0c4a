#include "stgsim/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace stgsim {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CSV file: " + path);

  CsvTable table;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) {
      table.header = split_line(line);
      continue;
    }
    if (line.empty() || line == "\r") continue;
    auto row = split_line(line);
    if (row.size() != table.header.size()) {
      throw std::runtime_error(path + ": ragged row at line " + std::to_string(lineno) +
                               " (expected " + std::to_string(table.header.size()) +
                               " cells, got " + std::to_string(row.size()) + ")");
    }
    table.rows.push_back(std::move(row));
  }
  if (table.header.empty()) throw std::runtime_error(path + ": empty file");
  return table;
}

double parse_double(const std::string& cell, const std::string& context) {
  const std::string s = trim(cell);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("non-numeric cell at " + context + ": '" + cell + "'");
  }
  if (!std::isfinite(v)) {
    throw std::runtime_error("non-finite value at " + context + ": '" + cell + "'");
  }
  return v;
}

long parse_long(const std::string& cell, const std::string& context) {
  const std::string s = trim(cell);
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("non-integer cell at " + context + ": '" + cell + "'");
  }
  return v;
}

std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace stgsim
