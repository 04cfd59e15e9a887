#pragma once

#include <cstdio>
#include <string>

namespace fractalscape::detail {

// Seventeen significant digits round-trip any double exactly.
inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace fractalscape::detail
