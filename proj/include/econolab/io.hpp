#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace econolab::io {

/// Two-column numeric table, the on-disk exchange format for every series
/// and sample batch: UTF-8, LF newlines, header row naming the columns
/// (t,value or t,price), and full round-trip precision values.
struct CsvTable {
  std::string time_label = "t";
  std::string value_label = "value";
  std::vector<double> times;
  std::vector<double> values;
};

/// Shortest exact decimal form of v (17 significant digits round-trip).
std::string format_double(double v);

void write_csv(std::ostream& os, const CsvTable& table);
void write_csv_file(const std::string& path, const CsvTable& table);

/// Parses a two-column CSV; malformed rows, missing headers, or non-numeric
/// cells raise IoError.
CsvTable read_csv(std::istream& is);
CsvTable read_csv_file(const std::string& path);

}  // namespace econolab::io
