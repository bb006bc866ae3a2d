#include "exact/sumfree.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "core/errors.hpp"

namespace sf {

bool is_sum_free(const IntegerSet& b, bool allow_equal) {
  const auto& e = b.elements;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = allow_equal ? i : i + 1; j < e.size(); ++j) {
      i64 s;
      if (__builtin_add_overflow(e[i], e[j], &s)) continue;
      if (b.contains(s)) return false;
    }
  return true;
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

class Solver {
 public:
  Solver(const IntegerSet& a, const SumFreeOptions& opt) : opt_(opt) {
    const auto& e = a.elements;
    n_ = e.size();
    clauses_.assign(n_, {});
    std::unordered_map<i64, std::size_t> pos;
    for (std::size_t i = 0; i < n_; ++i) pos[e[i]] = i;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) {
        if (i == j && !opt.allow_equal) continue;
        i64 s;
        if (__builtin_add_overflow(e[i], e[j], &s)) continue;
        auto it = pos.find(s);
        if (it == pos.end()) continue;
        Mask all = bit(i) | bit(j) | bit(it->second);
        for (std::size_t m : {i, j, it->second}) clauses_[m].push_back(all & ~bit(m));
      }
    for (auto& c : clauses_) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    // descending by value
    for (std::size_t i = n_; i-- > 0;) order_.push_back(i);
    deadline_ = Clock::now() + std::chrono::milliseconds(opt.time_limit_ms);
  }

  static Mask bit(std::size_t i) { return Mask{1} << i; }

  bool can_add(Mask inc, std::size_t e) const {
    for (Mask c : clauses_[e])
      if ((inc & c) == c) return false;
    return true;
  }

  bool feasible(Mask inc) const {
    for (std::size_t e = 0; e < n_; ++e)
      if ((inc & bit(e)) && !can_add(inc & ~bit(e), e)) return false;
    return true;
  }

  // Largest sum-free T with forced_in in T and T disjoint from forced_out;
  // stops as soon as a set of size >= target is seen.
  std::size_t run(Mask forced_in, Mask forced_out, std::size_t target) {
    fin_ = forced_in;
    fout_ = forced_out;
    target_ = target;
    stop_ = false;
    best_ = 0;
    best_mask_ = 0;
    if (!feasible(forced_in)) return 0;
    std::size_t cnt = static_cast<std::size_t>(__builtin_popcountll(forced_in));
    best_ = cnt;
    best_mask_ = forced_in;
    if (best_ >= target_) return best_;
    dfs(0, forced_in, cnt);
    return best_;
  }

  Mask best_mask() const { return best_mask_; }
  std::uint64_t nodes() const { return nodes_; }
  bool timed_out() const { return timed_out_; }
  std::size_t n() const { return n_; }

 private:
  void dfs(std::size_t p, Mask inc, std::size_t cnt) {
    if (stop_) return;
    if ((++nodes_ & 1023) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
      stop_ = true;
      return;
    }
    if (cnt > best_) {
      best_ = cnt;
      best_mask_ = inc;
      if (best_ >= target_) {
        stop_ = true;
        return;
      }
    }
    while (p < n_ && ((fin_ | fout_) & bit(order_[p]))) ++p;
    if (p == n_) return;
    std::size_t ub = cnt;
    for (std::size_t q = p; q < n_; ++q) {
      std::size_t e = order_[q];
      if (!((fin_ | fout_) & bit(e)) && can_add(inc, e)) ++ub;
    }
    if (ub <= best_) return;
    std::size_t e = order_[p];
    if (can_add(inc, e)) dfs(p + 1, inc | bit(e), cnt + 1);
    dfs(p + 1, inc, cnt);
  }

  SumFreeOptions opt_;
  std::size_t n_ = 0;
  std::vector<std::vector<Mask>> clauses_;
  std::vector<std::size_t> order_;
  Clock::time_point deadline_;
  Mask fin_ = 0, fout_ = 0;
  std::size_t target_ = 0, best_ = 0;
  Mask best_mask_ = 0;
  bool stop_ = false, timed_out_ = false;
  std::uint64_t nodes_ = 0;
};

IntegerSet from_mask(const IntegerSet& a, Mask m) {
  std::vector<i64> v;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (m & (Mask{1} << i)) v.push_back(a.elements[i]);
  IntegerSet s;
  s.elements = std::move(v);
  s.zero_allowed = a.zero_allowed;
  return s;
}

}  // namespace

SumFreeResult max_sum_free(const IntegerSet& a, const SumFreeOptions& opt) {
  if (a.size() > opt.max_size || a.size() > 64)
    throw PreconditionError("max_sum_free: set size " + std::to_string(a.size()) +
                            " exceeds cap " + std::to_string(std::min<std::size_t>(opt.max_size, 64)));
  SumFreeResult res;
  if (a.empty()) return res;
  Solver s(a, opt);
  std::size_t best = s.run(0, 0, a.size() + 1);
  Mask witness = s.best_mask();
  const bool timed_out = s.timed_out();
  if (!timed_out) {
    // ascending include-if-still-optimal pass gives the lexicographic minimum
    Mask fin = 0, fout = 0;
    for (std::size_t e = 0; e < s.n(); ++e) {
      Mask b = Mask{1} << e;
      std::size_t got = s.run(fin | b, fout, best);
      if (s.timed_out()) break;
      if (got >= best)
        fin |= b;
      else
        fout |= b;
      if (static_cast<std::size_t>(__builtin_popcountll(fin)) == best) {
        witness = fin;
        break;
      }
    }
  }
  res.size = best;
  res.witness = from_mask(a, witness);
  res.nodes_explored = s.nodes();
  res.timed_out = timed_out;
  return res;
}

}  // namespace sf
