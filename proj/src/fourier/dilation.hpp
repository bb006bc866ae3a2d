#pragma once

#include "core/integer_set.hpp"

namespace sf {

struct DilationBound {
  i64 x_num = 0;  // x_star = x_num / x_den, interior of an optimal cell
  i64 x_den = 1;
  double x_star = 0;
  double value = 0;      // max_x sum_a (phi - 1/3)(a x)
  std::size_t count = 0; // |witness|
  double lower_bound = 0;  // |A|/3 + value
  IntegerSet witness;
  bool exact = true;       // false when the grid fallback was used
  std::size_t cells = 0;
};

// Exact maximisation over the breakpoints k/(3|a|). Falls back to sampling
// grid_points equispaced points when sum 3|a| exceeds max_breakpoints.
DilationBound erdos_dilation_bound(const IntegerSet& A, std::size_t max_breakpoints = 30'000'000,
                                   std::size_t grid_points = 1 << 22);

// Number of a in A with a*num/den mod 1 in (1/3, 2/3).
std::size_t dilation_count(const IntegerSet& A, i64 num, i64 den);

}  // namespace sf
