#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace infill {

// Shortest decimal string that round-trips to the same double. Matches the
// raw printouts produced by typical interpreter consoles.
inline std::string fmt_shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Fixed-point with the given number of decimals.
inline std::string fmt_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

// Round to `decimals` places, then drop trailing zeros (and a trailing dot).
// "0.0770" -> "0.077", "0.0000" -> "0".
inline std::string fmt_rounded_trim(double v, int decimals) {
  std::string s = fmt_fixed(v, decimals);
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

}  // namespace infill
