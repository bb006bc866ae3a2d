#include "exact/dissociated.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace sf {

namespace {

std::vector<i128> subset_sums(const std::vector<i64>& d) {
  std::vector<i128> ss{0};
  ss.reserve(std::size_t{1} << d.size());
  for (i64 x : d) {
    std::size_t n = ss.size();
    for (std::size_t i = 0; i < n; ++i) ss.push_back(ss[i] + x);
  }
  return ss;
}

// Strictly positive signed sums of all nonzero sign patterns, sorted.
// Returns false if some nonzero pattern sums to zero.
bool positive_signed_sums(const std::vector<i64>& d, std::vector<i128>& out) {
  std::vector<i128> all{0};
  for (i64 x : d) {
    std::size_t n = all.size();
    all.reserve(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      all.push_back(all[i] + x);
      all.push_back(all[i] - x);
    }
  }
  out.clear();
  std::size_t zeros = 0;
  for (i128 v : all) {
    if (v == 0) ++zeros;
    else if (v > 0) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return zeros == 1;
}

}  // namespace

bool is_dissociated(const std::vector<i64>& d) {
  if (d.size() > 30) throw PreconditionError("is_dissociated: |D| exceeds cap 30");
  if (d.size() <= 20) {
    auto ss = subset_sums(d);
    std::sort(ss.begin(), ss.end());
    return std::adjacent_find(ss.begin(), ss.end()) == ss.end();
  }
  std::size_t h = d.size() / 2;
  std::vector<i64> left(d.begin(), d.begin() + static_cast<long>(h));
  std::vector<i64> right(d.begin() + static_cast<long>(h), d.end());
  std::vector<i128> l, r;
  if (!positive_signed_sums(left, l) || !positive_signed_sums(right, r)) return false;
  // both lists are symmetric, so a cross relation shows up among positives
  std::size_t i = 0, j = 0;
  while (i < l.size() && j < r.size()) {
    if (l[i] == r[j]) return false;
    if (l[i] < r[j]) ++i;
    else ++j;
  }
  return true;
}

bool is_dissociated(const IntegerSet& d) { return is_dissociated(d.elements); }

bool in_span(const std::vector<i64>& d, i64 x) {
  if (d.size() > 20) throw PreconditionError("in_span: |D| exceeds cap 20");
  auto ss = subset_sums(d);
  std::sort(ss.begin(), ss.end());
  for (i128 s : ss)
    if (std::binary_search(ss.begin(), ss.end(), s - x)) return true;
  return false;
}

namespace {

// (ss + a) and ss disjoint, both sorted.
bool shift_disjoint(const std::vector<i128>& ss, i64 a) {
  std::size_t i = 0, j = 0;
  while (i < ss.size() && j < ss.size()) {
    i128 u = ss[i] + a, v = ss[j];
    if (u == v) return false;
    if (u < v) ++i;
    else ++j;
  }
  return true;
}

std::vector<i128> extend(const std::vector<i128>& ss, i64 a) {
  std::vector<i128> out(ss.size() * 2);
  std::vector<i128> shifted(ss.size());
  for (std::size_t i = 0; i < ss.size(); ++i) shifted[i] = ss[i] + a;
  std::merge(ss.begin(), ss.end(), shifted.begin(), shifted.end(), out.begin());
  return out;
}

struct DimSearch {
  const std::vector<i64>& e;
  std::vector<i64> cur, best;

  void dfs(std::size_t i, const std::vector<i128>& ss) {
    if (cur.size() > best.size()) best = cur;
    if (i == e.size() || cur.size() + (e.size() - i) <= best.size()) return;
    if (shift_disjoint(ss, e[i])) {
      cur.push_back(e[i]);
      dfs(i + 1, extend(ss, e[i]));
      cur.pop_back();
    }
    dfs(i + 1, ss);
  }
};

}  // namespace

DimensionResult additive_dimension(const IntegerSet& a, DimensionMode mode) {
  DimensionResult r;
  std::vector<i64> chosen;
  if (mode == DimensionMode::Exact) {
    if (a.size() > 20) throw PreconditionError("additive_dimension: exact mode needs |A| <= 20");
    DimSearch s{a.elements, {}, {}};
    s.dfs(0, {0});
    chosen = s.best;
    r.exact = true;
  } else {
    std::vector<i128> ss{0};
    for (i64 x : a.elements) {
      if (shift_disjoint(ss, x)) {
        chosen.push_back(x);
        ss = extend(ss, x);
      }
      if (ss.size() > (std::size_t{1} << 24))
        throw BudgetError("additive_dimension: greedy subset-sum table exceeds budget");
    }
  }
  r.dimension = chosen.size();
  r.witness = make_set(chosen, a.zero_allowed);
  return r;
}

DimensionResult best_dimension(const IntegerSet& a) {
  return additive_dimension(a, a.size() <= 20 ? DimensionMode::Exact : DimensionMode::Greedy);
}

IntegerSet span(const IntegerSet& d, std::size_t max_values) {
  if (d.size() > 20) throw PreconditionError("span: |D| exceeds cap 20");
  std::vector<i64> s{0};
  for (i64 x : d.elements) {
    std::vector<i64> next;
    next.reserve(s.size() * 3);
    for (i64 v : s) {
      next.push_back(v);
      next.push_back(checked_add(v, x));
      next.push_back(checked_add(v, -x));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() > max_values) throw BudgetError("span: value budget exceeded");
    s = std::move(next);
  }
  return make_set(std::move(s), true);
}

}  // namespace sf
