#include "exact/energy.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace sf {

namespace {

std::vector<i64> differences(const IntegerSet& x) {
  std::vector<i64> d;
  d.reserve(x.size() * x.size());
  for (i64 u : x.elements)
    for (i64 v : x.elements) d.push_back(checked_add(u, -v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::uint64_t additive_energy(const IntegerSet& x, const IntegerSet& y) {
  if (static_cast<double>(x.size()) * static_cast<double>(y.size()) > 1e8)
    throw PreconditionError("additive_energy: |X||Y| exceeds 1e8");
  auto dx = differences(x);
  auto dy = differences(y);
  std::uint64_t e = 0;
  std::size_t i = 0, j = 0;
  while (i < dx.size() && j < dy.size()) {
    if (dx[i] < dy[j]) {
      ++i;
    } else if (dy[j] < dx[i]) {
      ++j;
    } else {
      i64 v = dx[i];
      std::uint64_t cx = 0, cy = 0;
      while (i < dx.size() && dx[i] == v) ++i, ++cx;
      while (j < dy.size() && dy[j] == v) ++j, ++cy;
      e += cx * cy;
    }
  }
  return e;
}

namespace {

struct IsoWalker {
  const std::vector<i64>& a;
  const std::vector<i64>& b;
  int ell;
  bool ok = true;

  // Multisets of signed symbols 0..2n-1 (symbol s: index s/2, sign by parity),
  // nondecreasing, so each multiset is visited once.
  void walk(std::size_t from, int depth, i128 sa, i128 sb) {
    if (!ok) return;
    if (depth > 0 && ((sa == 0) != (sb == 0))) {
      ok = false;
      return;
    }
    if (depth == ell) return;
    for (std::size_t s = from; s < 2 * a.size(); ++s) {
      std::size_t i = s / 2;
      i128 da = (s % 2 == 0) ? a[i] : -static_cast<i128>(a[i]);
      i128 db = (s % 2 == 0) ? b[i] : -static_cast<i128>(b[i]);
      walk(s, depth + 1, sa + da, sb + db);
      if (!ok) return;
    }
  }
};

}  // namespace

bool check_f_ell_isomorphism(const std::vector<i64>& a, const std::vector<i64>& b, int ell,
                             std::uint64_t budget) {
  if (a.size() != b.size()) throw PreconditionError("isomorphism check: size mismatch");
  if (ell < 1) throw PreconditionError("isomorphism check: ell must be >= 1");
  // number of multisets of size <= ell from 2n symbols
  double count = 0;
  const double sym = 2.0 * static_cast<double>(a.size());
  for (int k = 1; k <= ell; ++k) count += std::exp(std::lgamma(sym + k) - std::lgamma(k + 1.0) - std::lgamma(sym));
  if (count > static_cast<double>(budget))
    throw BudgetError("isomorphism check: enumeration budget exceeded");
  IsoWalker w{a, b, ell};
  w.walk(0, 0, 0, 0);
  return w.ok;
}

bool check_f_ell_isomorphism(const IntegerSet& a, const IntegerSet& b, int ell) {
  return check_f_ell_isomorphism(a.elements, b.elements, ell);
}

}  // namespace sf
