#include "fourier/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "core/errors.hpp"
#include "core/number_theory.hpp"
#include "fourier/kernels.hpp"

namespace sf {

double phi_minus_third(double x) {
  long double y = static_cast<long double>(x) - std::floor(static_cast<long double>(x));
  long double t = 3 * y;
  return (t > 1 && t < 2) ? 2.0 / 3.0 : -1.0 / 3.0;
}

double phi_minus_third_rational(i64 num, i64 den) {
  if (den <= 0) throw PreconditionError("phi_minus_third_rational: denominator must be positive");
  i128 r = num % den;
  if (r < 0) r += den;
  i128 t = 3 * r;
  return (t > den && t < 2 * static_cast<i128>(den)) ? 2.0 / 3.0 : -1.0 / 3.0;
}

namespace {

std::size_t coprime3_count(i64 upto) { return static_cast<std::size_t>(upto - upto / 3); }

void check_budget(std::size_t terms, const SeriesBudget& b) {
  if (terms > b.max_terms) throw BudgetError("series term budget exceeded");
}

// Squarefree products of primes <= Q other than 3, not exceeding limit.
void smooth_squarefree(const std::vector<i64>& primes, std::size_t idx, i64 cur, int mu,
                       i64 limit, std::vector<std::pair<i64, int>>& out) {
  out.emplace_back(cur, mu);
  for (std::size_t i = idx; i < primes.size(); ++i) {
    if (cur > limit / primes[i]) break;
    smooth_squarefree(primes, i + 1, cur * primes[i], -mu, limit, out);
  }
}

}  // namespace

SumFreeSpectrum build_FA(const IntegerSet& A, i64 M, double Q, SeriesBudget b) {
  if (M < 1) throw PreconditionError("build_FA: truncation must be positive");
  if (A.contains(0)) throw PreconditionError("build_FA: 0 in A");
  if (static_cast<double>(M) * static_cast<double>(A.max_abs()) > 4e18)
    throw BudgetError("build_FA: frequency budget exceeded");
  check_budget(A.size() * coprime3_count(M), b);
  SumFreeSpectrum s;
  s.A = A;
  s.M = M;
  s.Q = Q;
  std::vector<std::pair<i64, double>> c;
  c.reserve(A.size() * coprime3_count(M));
  for (i64 a : A.elements) {
    i64 aa = std::abs(a);
    for (i64 n = 1; n <= M; ++n) {
      int x = chi(n);
      if (x) c.emplace_back(n * aa, x / static_cast<double>(n));
    }
  }
  s.F = TrigPolynomial::from_cosines(std::move(c));
  s.cA = build_cA(A);
  if (Q > 0) s.RQ = build_RQ(A, Q, M, b);
  return s;
}

TrigPolynomial build_cA(const IntegerSet& A) {
  std::vector<std::pair<i64, double>> c;
  for (i64 a : A.elements) c.emplace_back(std::abs(a), 1.0);
  return TrigPolynomial::from_cosines(std::move(c));
}

TrigPolynomial build_RQ(const IntegerSet& A, double Q, i64 M, SeriesBudget b) {
  check_budget(A.size() * coprime3_count(M), b);
  // Q-rough sieve on [1, M]
  std::vector<char> rough(static_cast<std::size_t>(M) + 1, 1);
  for (i64 p : primes_upto(std::min<i64>(M, static_cast<i64>(std::floor(Q)))))
    for (i64 j = p; j <= M; j += p) rough[j] = 0;
  std::vector<std::pair<i64, double>> c;
  for (i64 a : A.elements) {
    i64 aa = std::abs(a);
    for (i64 n = 2; n <= M; ++n) {
      int x = chi(n);
      if (x && rough[n]) c.emplace_back(n * aa, x / static_cast<double>(n));
    }
  }
  return TrigPolynomial::from_cosines(std::move(c));
}

double chi_partial_sum_bound(double t) {
  long double y = static_cast<long double>(t) - std::floor(static_cast<long double>(t));
  long double s3 = std::fabs(std::sin(3 * std::numbers::pi_v<long double> * y));
  // at multiples of 1/3 the cosine partial sums are bounded by 1
  if (s3 < 1e-300L) return 1.0;
  long double s1 = std::fabs(std::sin(std::numbers::pi_v<long double> * y));
  return static_cast<double>(1 + 2 * s1 / s3);
}

double fa_tail_bound(const IntegerSet& A, i64 M, double x) {
  double s = 0;
  for (i64 a : A.elements) {
    long double t = static_cast<long double>(std::abs(a)) * x;
    s += 2 * chi_partial_sum_bound(static_cast<double>(t - std::floor(t))) / static_cast<double>(M + 1);
  }
  return s;
}

SiftResult sift(const SumFreeSpectrum& series, double Q, SeriesBudget b) {
  SiftResult r;
  std::vector<i64> primes;
  r.weight_product = 1;
  r.weight_l1 = 1;
  for (i64 p : primes_upto(static_cast<i64>(std::floor(Q)))) {
    r.weight_product *= 1 + 1.0 / p;
    if (p != 3) {
      primes.push_back(p);
      r.weight_l1 *= 1 + 1.0 / p;
    }
  }
  std::vector<std::pair<i64, int>> ks;
  smooth_squarefree(primes, 0, 1, 1, series.M, ks);
  std::sort(ks.begin(), ks.end());
  std::size_t total = 0;
  for (const auto& [k, mu] : ks) total += series.A.size() * coprime3_count(series.M / k);
  check_budget(total, b);

  std::vector<std::pair<i64, double>> c;
  c.reserve(total);
  for (const auto& [k, mu] : ks) {
    const double w = mu * chi(k) / static_cast<double>(k);
    r.ks.push_back(k);
    r.weights.push_back(w);
    const i64 nmax = series.M / k;
    for (i64 a : series.A.elements) {
      const i64 ka = k * std::abs(a);
      for (i64 n = 1; n <= nmax; ++n) {
        int x = chi(n);
        if (x) c.emplace_back(n * ka, w * x / static_cast<double>(n));
      }
    }
  }
  r.poly = TrigPolynomial::from_cosines(std::move(c));
  return r;
}

double sift_tail_bound(const SiftResult& s, const IntegerSet& A, i64 M, double x) {
  // untruncated identity minus the truncated combination, for both sides
  double lhs = 0;
  for (std::size_t i = 0; i < s.ks.size(); ++i) {
    long double kx = static_cast<long double>(s.ks[i]) * x;
    lhs += std::fabs(s.weights[i]) * fa_tail_bound(A, M / s.ks[i], static_cast<double>(kx - std::floor(kx)));
  }
  return lhs + fa_tail_bound(A, M, x);
}

RqCoefficientReport rq_coefficient_bound(const IntegerSet& A, double Q, i64 T, i64 M) {
  if (Q <= 1) throw PreconditionError("rq_coefficient_bound: Q must exceed 1");
  if (T < 2) throw PreconditionError("rq_coefficient_bound: T must be at least 2");
  if (A.max_abs() > T) throw PreconditionError("rq_coefficient_bound: A must lie in [-T, T]");
  const i64 lim = 10 * T;
  const i64 nmax = std::min(M, lim);
  std::vector<char> rough(static_cast<std::size_t>(nmax) + 1, 1);
  for (i64 p : primes_upto(std::min<i64>(nmax, static_cast<i64>(std::floor(Q)))))
    for (i64 j = p; j <= nmax; j += p) rough[j] = 0;
  // frequency -> (coefficient, divisor bound, contributing n list)
  struct Acc {
    double coef = 0;
    double bound = 0;
    std::vector<i64> ns;
  };
  std::map<i64, Acc> acc;
  for (i64 a : A.elements) {
    i64 aa = std::abs(a);
    for (i64 n = 2; n <= nmax && n * aa <= lim; ++n) {
      if (!rough[n]) continue;
      auto& e = acc[n * aa];
      e.coef += chi(n) / static_cast<double>(n);
      e.bound += 1.0 / static_cast<double>(n);
      e.ns.push_back(n);
    }
  }
  RqCoefficientReport rep;
  rep.frequencies = acc.size();
  for (auto& [m, e] : acc) {
    if (std::fabs(e.coef) > rep.max_abs_coefficient) {
      rep.max_abs_coefficient = std::fabs(e.coef);
      rep.argmax = m;
    }
    if (std::fabs(e.coef) > e.bound + 1e-15) rep.divisor_bound_ok = false;
    std::sort(e.ns.begin(), e.ns.end());
    if (std::adjacent_find(e.ns.begin(), e.ns.end()) != e.ns.end()) rep.unique_b_ok = false;
  }
  rep.log_t_over_q = std::log(static_cast<double>(T)) / Q;
  rep.ratio = rep.max_abs_coefficient / rep.log_t_over_q;
  return rep;
}

GeneralContReport l2_truncation_check(const GeneralContInstance& inst) {
  auto small = primes_upto(static_cast<i64>(std::floor(inst.Q1)));
  if (inst.nu.size() != small.size())
    throw PreconditionError("l2_truncation_check: nu must have one entry per prime <= Q1");
  if (inst.Q < inst.Q1) throw PreconditionError("l2_truncation_check: Q must be at least Q1");
  if (inst.k == 0) throw PreconditionError("l2_truncation_check: k must be nonzero");
  i64 P = 1, Pnu = 1;
  for (std::size_t i = 0; i < small.size(); ++i) {
    P = checked_mul(P, small[i]);
    for (int e = 0; e < inst.nu[i]; ++e) Pnu = checked_mul(Pnu, small[i]);
  }
  const i64 mod = checked_mul(P, Pnu);
  if (std::gcd(mod_pos(inst.r, P), P) != 1)
    throw PreconditionError("l2_truncation_check: r must be a unit modulo the prime product");
  std::vector<i64> seen_s, seen_b;
  for (const auto& [s, bs] : inst.classes) {
    if (std::gcd(mod_pos(s, P), P) != 1)
      throw PreconditionError("l2_truncation_check: class residue s is not a unit");
    seen_s.push_back(mod_pos(s, P));
    if (bs.size() > inst.K)
      throw PreconditionError("l2_truncation_check: class larger than K");
    for (i64 b : bs) {
      seen_b.push_back(b);
      if (mod_pos(static_cast<i64>(static_cast<i128>(b) * inst.k % mod), mod) !=
          mod_pos(static_cast<i64>(static_cast<i128>(s) * Pnu % mod), mod))
        throw PreconditionError("l2_truncation_check: b k is not congruent to s times prod p^nu_p");
    }
  }
  std::sort(seen_s.begin(), seen_s.end());
  std::sort(seen_b.begin(), seen_b.end());
  if (std::adjacent_find(seen_s.begin(), seen_s.end()) != seen_s.end() ||
      std::adjacent_find(seen_b.begin(), seen_b.end()) != seen_b.end())
    throw PreconditionError("l2_truncation_check: classes are not disjoint");

  const i64 twoT = 2 * inst.T;
  std::vector<char> rough(static_cast<std::size_t>(twoT) + 1, 1);
  for (i64 p : primes_upto(std::min<i64>(twoT, static_cast<i64>(std::floor(inst.Q)))))
    for (i64 j = p; j <= twoT; j += p) rough[j] = 0;
  std::vector<Term> terms;
  for (const auto& [s, bs] : inst.classes) {
    const i64 target = mod_pos(static_cast<i64>(static_cast<i128>(inst.r) * mod_inverse(s, P) % P), P);
    for (i64 b : bs) {
      const i64 step = std::abs(checked_mul(b, inst.k));
      for (i64 n = 2; n * step < twoT; ++n) {
        if (!rough[n] || mod_pos(n, P) != target || chi(n) == 0) continue;
        terms.emplace_back(n * b * inst.k, chi(n) / static_cast<double>(n));
      }
    }
  }
  TrigPolynomial E = TrigPolynomial::from_terms(std::move(terms));
  TrigPolynomial EV = convolve(E, vp_kernel(inst.T));
  GeneralContReport rep;
  rep.terms = EV.size();
  rep.norm = EV.l2_norm();
  rep.bound = std::log(static_cast<double>(inst.T)) / std::sqrt(inst.Q) *
              std::sqrt(static_cast<double>(inst.K));
  rep.ratio = rep.norm / rep.bound;
  return rep;
}

}  // namespace sf
