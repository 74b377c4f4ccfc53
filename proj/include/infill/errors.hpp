#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace infill {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller-supplied value violates a precondition (bad count, bad fraction,
// dimension mismatch, ...).
struct invalid_argument_error : error {
  using error::error;
};

// The data itself is unusable (non-finite entries, too few rows, ...).
struct invalid_data_error : error {
  using error::error;
};

// Two design points coincide within the duplicate tolerance.
struct duplicate_point_error : error {
  std::vector<std::pair<int, int>> row_pairs;

  explicit duplicate_point_error(std::string msg,
                                 std::vector<std::pair<int, int>> pairs = {})
      : error(std::move(msg)), row_pairs(std::move(pairs)) {}
};

// A linear-algebra or optimization step failed beyond recovery.
struct numerical_error : error {
  using error::error;
};

// Malformed input file; line is 1-based, 0 when unknown.
struct parse_error : error {
  int line = 0;

  explicit parse_error(std::string msg, int line_number = 0)
      : error(std::move(msg)), line(line_number) {}
};

}  // namespace infill
