#include "core/integer_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "core/errors.hpp"

namespace sf {

bool IntegerSet::contains(i64 x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

i64 IntegerSet::max_abs() const {
  i64 m = 0;
  for (i64 x : elements) m = std::max(m, x < 0 ? -x : x);
  return m;
}

IntegerSet make_set(std::vector<i64> v, bool zero_allowed) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (!zero_allowed && std::binary_search(v.begin(), v.end(), i64{0}))
    throw PreconditionError("set contains 0");
  IntegerSet s;
  s.elements = std::move(v);
  s.zero_allowed = zero_allowed;
  return s;
}

IntegerSet validate_set(const std::vector<i64>& raw, bool zero_allowed, std::string name) {
  std::vector<i64> sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  std::vector<i64> dups;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1] && (dups.empty() || dups.back() != sorted[i]))
      dups.push_back(sorted[i]);
  bool has_zero = !zero_allowed && std::binary_search(sorted.begin(), sorted.end(), i64{0});
  if (!dups.empty() || has_zero) {
    std::ostringstream msg;
    msg << "invalid set";
    if (has_zero) msg << "; zero element not allowed";
    if (!dups.empty()) {
      msg << "; duplicate elements:";
      for (i64 d : dups) msg << ' ' << d;
    }
    throw InputError(msg.str());
  }
  IntegerSet s;
  s.elements = std::move(sorted);
  s.zero_allowed = zero_allowed;
  s.name = std::move(name);
  return s;
}

IntegerSet dilate(const IntegerSet& a, i64 d) {
  std::vector<i64> v;
  v.reserve(a.size());
  for (i64 x : a.elements) v.push_back(checked_mul(x, d));
  return make_set(std::move(v), a.zero_allowed);
}

IntegerSet negate(const IntegerSet& a) { return dilate(a, -1); }

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw BudgetError("64-bit overflow in addition");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw BudgetError("64-bit overflow in multiplication");
  return r;
}

}  // namespace sf
