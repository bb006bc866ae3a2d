#include "fourier/dilation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "core/errors.hpp"

namespace sf {

namespace {

bool inside(i64 a, i64 num, i64 den) {
  i128 r = (static_cast<i128>(a) * num) % den;
  if (r < 0) r += den;
  return 3 * r > den && 3 * r < 2 * static_cast<i128>(den);
}

struct Event {
  i64 num, den;
  int delta;
};

bool less(const Event& x, const Event& y) {
  return static_cast<i128>(x.num) * y.den < static_cast<i128>(y.num) * x.den;
}

bool same(const Event& x, const Event& y) {
  return static_cast<i128>(x.num) * y.den == static_cast<i128>(y.num) * x.den;
}

void set_mid(DilationBound& r, i64 n1, i64 d1, i64 n2, i64 d2) {
  i128 num = static_cast<i128>(n1) * d2 + static_cast<i128>(n2) * d1;
  i128 den = 2 * static_cast<i128>(d1) * d2;
  i128 a = num, b = den;
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  num /= a;
  den /= a;
  if (den > INT64_MAX) throw BudgetError("dilation bound: midpoint denominator overflow");
  r.x_num = static_cast<i64>(num);
  r.x_den = static_cast<i64>(den);
}

}  // namespace

std::size_t dilation_count(const IntegerSet& A, i64 num, i64 den) {
  std::size_t c = 0;
  for (i64 a : A.elements) c += inside(a, num, den);
  return c;
}

DilationBound erdos_dilation_bound(const IntegerSet& A, std::size_t max_breakpoints,
                                   std::size_t grid_points) {
  if (A.contains(0)) throw PreconditionError("erdos_dilation_bound: 0 in A");
  DilationBound r;
  if (A.empty()) return r;
  double total = 0;
  for (i64 a : A.elements) total += 3.0 * static_cast<double>(std::abs(a));
  if (total <= static_cast<double>(max_breakpoints)) {
    std::vector<Event> ev;
    ev.reserve(static_cast<std::size_t>(total * 2 / 3) + 1);
    for (i64 a : A.elements) {
      const i64 den = 3 * std::abs(a);
      for (i64 k = 1; k < den; ++k) {
        if (k % 3 == 0) continue;
        ev.push_back({k, den, k % 3 == 1 ? +1 : -1});
      }
    }
    std::sort(ev.begin(), ev.end(), less);
    // cell (0, first event) has nobody inside
    std::size_t best = 0;
    set_mid(r, 0, 1, ev.empty() ? 1 : ev[0].num, ev.empty() ? 1 : ev[0].den);
    long cur = 0;
    std::size_t cells = 1;
    for (std::size_t i = 0; i < ev.size();) {
      std::size_t j = i;
      while (j < ev.size() && same(ev[i], ev[j])) cur += ev[j++].delta;
      ++cells;
      if (static_cast<std::size_t>(cur) > best) {
        best = static_cast<std::size_t>(cur);
        if (j < ev.size())
          set_mid(r, ev[i].num, ev[i].den, ev[j].num, ev[j].den);
        else
          set_mid(r, ev[i].num, ev[i].den, 1, 1);
      }
      i = j;
    }
    r.cells = cells;
    r.exact = true;
  } else {
    std::size_t best = 0;
    r.x_num = 1;
    r.x_den = 2 * static_cast<i64>(grid_points);
    for (std::size_t j = 0; j < grid_points; ++j) {
      const i64 num = 2 * static_cast<i64>(j) + 1;
      std::size_t c = dilation_count(A, num, 2 * static_cast<i64>(grid_points));
      if (c > best) {
        best = c;
        r.x_num = num;
      }
    }
    r.cells = grid_points;
    r.exact = false;
  }
  std::vector<i64> w;
  for (i64 a : A.elements)
    if (inside(a, r.x_num, r.x_den)) w.push_back(a);
  r.witness = make_set(std::move(w));
  r.count = r.witness.size();
  r.x_star = static_cast<double>(r.x_num) / static_cast<double>(r.x_den);
  r.value = static_cast<double>(r.count) - static_cast<double>(A.size()) / 3.0;
  r.lower_bound = static_cast<double>(r.count);
  return r;
}

}  // namespace sf
