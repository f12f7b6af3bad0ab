#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace charnet {

// Locale-independent rendering with 6 significant digits; NaN renders as NA.
inline std::string format_real(double value, int precision = 6) {
  if (std::isnan(value)) return "NA";
  if (value == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
  if (ec != std::errc{}) return "NA";
  return std::string(buf, end);
}

}  // namespace charnet
