#ifndef EGG_NUMERIC_HPP
#define EGG_NUMERIC_HPP

#include <string>

namespace egg {

// Comparison tolerance for payoff/probability equalities.
inline constexpr double kEps = 1e-9;

// Looser tolerance used when verifying mixed equilibria against best responses.
inline constexpr double kBestResponseEps = 1e-7;

inline bool approx_eq(double a, double b, double eps = kEps) {
  return a - b <= eps && b - a <= eps;
}

inline bool strictly_less(double a, double b, double eps = kEps) { return a < b - eps; }

inline bool strictly_greater(double a, double b, double eps = kEps) { return a > b + eps; }

// Canonical decimal rendering: integers print bare ("3", "-5"), everything else
// with the shortest digit string that round-trips through strtod.
std::string num_to_string(double x);

}  // namespace egg

#endif
