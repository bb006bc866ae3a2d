#pragma once

#include <vector>

#include "core/integer_set.hpp"

namespace sf {

int chi(i64 n);
int mobius(i64 n);
bool is_q_rough(i64 n, double Q);

std::vector<i64> primes_upto(i64 n);
bool is_prime(i64 n);
// Smallest prime in (lo, hi]; 0 if none.
i64 smallest_prime_in(i64 lo, i64 hi);

int valuation(i64 n, i64 p);
i64 mod_pos(i64 a, i64 m);
i64 mod_inverse(i64 a, i64 m);  // throws if not invertible
i64 mul_mod(i64 a, i64 b, i64 m);

// Squarefree divisors of the product of all primes <= Q, ascending.
std::vector<i64> primorial_divisors(double Q);

}  // namespace sf
