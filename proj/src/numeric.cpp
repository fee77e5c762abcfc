#include "egg/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace egg {

std::string num_to_string(double x) {
  if (x == 0.0) return "0";  // also normalizes -0
  if (std::floor(x) == x && std::fabs(x) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", x);
    return buf;
  }
  char buf[40];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

}  // namespace egg
