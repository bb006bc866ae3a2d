#pragma once

#include "core/integer_set.hpp"

namespace sf {

enum class DimensionMode { Exact, Greedy };

struct DimensionResult {
  std::size_t dimension = 0;
  IntegerSet witness;
  bool exact = false;
};

// All 2^|D| subset sums distinct. |D| <= 30.
bool is_dissociated(const IntegerSet& d);
bool is_dissociated(const std::vector<i64>& d);

// Exact mode requires |A| <= 20. Greedy scans ascending and keeps every
// element that preserves dissociativity.
DimensionResult additive_dimension(const IntegerSet& a, DimensionMode mode);

// Exact for |A| <= 20, greedy otherwise.
DimensionResult best_dimension(const IntegerSet& a);

// Signed sums with coefficients in {-1,0,1}. |D| <= 20; throws BudgetError
// when the result would exceed max_values.
IntegerSet span(const IntegerSet& d, std::size_t max_values = 50'000'000);
bool in_span(const std::vector<i64>& d, i64 x);

}  // namespace sf
