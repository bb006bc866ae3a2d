#include "core/number_theory.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace sf {

int chi(i64 n) {
  i64 r = mod_pos(n, 3);
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

int mobius(i64 n) {
  if (n <= 0) throw PreconditionError("mobius: n must be positive");
  int mu = 1;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

bool is_q_rough(i64 n, double Q) {
  if (n <= 0) throw PreconditionError("is_q_rough: n must be positive");
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) return static_cast<double>(p) > Q;
  }
  return n == 1 || static_cast<double>(n) > Q;
}

std::vector<i64> primes_upto(i64 n) {
  std::vector<i64> out;
  if (n < 2) return out;
  std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
  for (i64 i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (i64 j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<i128>(a) * b) % m);
}

static i64 pow_mod(i64 b, i64 e, i64 m) {
  i64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  i64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

i64 smallest_prime_in(i64 lo, i64 hi) {
  for (i64 n = lo + 1; n <= hi; ++n)
    if (is_prime(n)) return n;
  return 0;
}

int valuation(i64 n, i64 p) {
  if (n == 0) throw PreconditionError("valuation of 0");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

i64 mod_pos(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mod_inverse(i64 a, i64 m) {
  i64 r0 = mod_pos(a, m), r1 = m;
  i64 s0 = 1, s1 = 0;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw PreconditionError("mod_inverse: not invertible");
  return mod_pos(s0, m);
}

std::vector<i64> primorial_divisors(double Q) {
  std::vector<i64> divs{1};
  for (i64 p : primes_upto(static_cast<i64>(std::floor(Q)))) {
    std::size_t n = divs.size();
    for (std::size_t i = 0; i < n; ++i) {
      i64 d;
      if (__builtin_mul_overflow(divs[i], p, &d)) throw BudgetError("primorial overflow");
      divs.push_back(d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace sf
