#include "econolab/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "econolab/errors.hpp"

namespace econolab::io {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const CsvTable& table) {
  if (table.times.size() != table.values.size())
    throw IoError("csv: column length mismatch");
  os << table.time_label << ',' << table.value_label << '\n';
  for (std::size_t i = 0; i < table.times.size(); ++i)
    os << format_double(table.times[i]) << ',' << format_double(table.values[i])
       << '\n';
  if (!os) throw IoError("csv: write failed");
}

void write_csv_file(const std::string& path, const CsvTable& table) {
  std::ofstream out(path);
  if (!out) throw IoError("csv: cannot open for writing: " + path);
  write_csv(out, table);
}

namespace {

double parse_cell(const std::string& cell, std::size_t line_no) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw IoError("csv: non-numeric cell on line " + std::to_string(line_no));
  return v;
}

}  // namespace

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  if (!std::getline(is, line)) throw IoError("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto comma = line.find(',');
  if (comma == std::string::npos) throw IoError("csv: header must have two columns");
  table.time_label = line.substr(0, comma);
  table.value_label = line.substr(comma + 1);

  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto split = line.find(',');
    if (split == std::string::npos)
      throw IoError("csv: missing comma on line " + std::to_string(line_no));
    table.times.push_back(parse_cell(line.substr(0, split), line_no));
    table.values.push_back(parse_cell(line.substr(split + 1), line_no));
  }
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("csv: cannot open for reading: " + path);
  return read_csv(in);
}

}  // namespace econolab::io
