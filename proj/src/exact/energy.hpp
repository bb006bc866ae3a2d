#pragma once

#include <cstdint>
#include <vector>

#include "core/integer_set.hpp"

namespace sf {

// #{(x1,x2,y1,y2) : x1 - x2 = y1 - y2}
std::uint64_t additive_energy(const IntegerSet& x, const IntegerSet& y);
inline std::uint64_t additive_energy(const IntegerSet& x) { return additive_energy(x, x); }

// Bidirectional check that a[i] -> b[i] preserves every vanishing signed sum
// of at most ell terms (repetition allowed).
bool check_f_ell_isomorphism(const std::vector<i64>& a, const std::vector<i64>& b, int ell,
                             std::uint64_t budget = 2'000'000'000ULL);

// Order-preserving pairing of two sets of equal size.
bool check_f_ell_isomorphism(const IntegerSet& a, const IntegerSet& b, int ell);

}  // namespace sf
