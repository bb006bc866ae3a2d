#pragma once

#include <cstdint>

#include "core/integer_set.hpp"

namespace sf {

struct SumFreeOptions {
  std::int64_t time_limit_ms = 60000;
  bool allow_equal = true;  // x = y counts as a Schur triple
  std::size_t max_size = 40;
};

struct SumFreeResult {
  std::size_t size = 0;
  IntegerSet witness;
  std::uint64_t nodes_explored = 0;
  bool timed_out = false;
};

bool is_sum_free(const IntegerSet& b, bool allow_equal = true);

// Maximum sum-free subset by branch and bound. The witness is the
// lexicographically smallest maximum subset (as a sorted list).
SumFreeResult max_sum_free(const IntegerSet& a, const SumFreeOptions& opt = {});

}  // namespace sf
