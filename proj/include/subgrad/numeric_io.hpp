#pragma once

#include <cstdio>
#include <string>

namespace subgrad {

// 17-significant-digit decimal form (trailing zeros trimmed); round-trips
// every finite double and always uses '.' as the decimal separator.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace subgrad
