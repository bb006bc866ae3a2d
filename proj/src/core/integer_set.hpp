#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sf {

using i64 = std::int64_t;
using i128 = __int128;

struct IntegerSet {
  std::vector<i64> elements;  // strictly increasing
  bool zero_allowed = false;
  std::string name;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  bool contains(i64 x) const;
  i64 max_abs() const;
  bool operator==(const IntegerSet& o) const { return elements == o.elements; }
};

// Sorts and deduplicates; throws PreconditionError on 0 unless allowed.
IntegerSet make_set(std::vector<i64> v, bool zero_allowed = false);

// Strict validation for user input: throws InputError naming every zero and
// duplicate element instead of silently repairing them.
IntegerSet validate_set(const std::vector<i64>& raw, bool zero_allowed = false,
                        std::string name = {});

IntegerSet dilate(const IntegerSet& a, i64 d);
IntegerSet negate(const IntegerSet& a);

// Checked 64-bit arithmetic; throws BudgetError on overflow.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

}  // namespace sf
