#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "infill/design.hpp"
#include "infill/errors.hpp"
#include "infill/numfmt.hpp"
#include "infill/types.hpp"

namespace infill {

struct CsvTable {
  std::vector<std::string> header;
  Matrix values;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace detail

// Comma-separated values with a header row: one line per design point,
// decimal point, UTF-8. Errors carry the 1-based line number.
inline CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open CSV file: " + path);
  std::string line;
  int line_no = 0;

  CsvTable table;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const std::vector<std::string> cells = detail::split_line(line);
    if (table.header.empty()) {
      for (const auto& cell : cells)
        if (cell.empty())
          throw parse_error("line " + std::to_string(line_no) + ": empty header cell", line_no);
      table.header = cells;
      continue;
    }
    if (cells.size() != table.header.size())
      throw parse_error("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(table.header.size()) + " cells, found " +
                            std::to_string(cells.size()),
                        line_no);
    std::vector<double> row(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string& cell = cells[c];
      double v = 0.0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
        throw parse_error("line " + std::to_string(line_no) + ": cannot parse number '" + cell +
                              "'",
                          line_no);
      row[c] = v;
    }
    rows.push_back(std::move(row));
  }
  if (table.header.empty()) throw parse_error("CSV file has no header row: " + path);

  table.values.resize(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(table.header.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < table.header.size(); ++c)
      table.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  return table;
}

// Reads a features CSV as a sampling plan (entries must already be in [0,1]).
inline SamplingPlan load_plan_csv(const std::string& path) {
  CsvTable table = read_csv(path);
  if (table.values.rows() < 1) throw invalid_data_error("CSV has no data rows: " + path);
  return SamplingPlan(std::move(table.values), std::move(table.header));
}

inline void write_csv(const std::string& path, const std::vector<std::string>& header,
                      const Matrix& values) {
  std::ofstream out(path);
  if (!out) throw error("cannot write file: " + path);
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << "\n";
  for (int r = 0; r < values.rows(); ++r) {
    for (int c = 0; c < values.cols(); ++c) out << (c ? "," : "") << fmt_shortest(values(r, c));
    out << "\n";
  }
}

// Row-of-strings variant for tables mixing text and numbers.
inline void write_csv_rows(const std::string& path, const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw error("cannot write file: " + path);
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << "\n";
  }
}

inline void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw error("cannot write file: " + path);
  out << content;
}

}  // namespace infill
