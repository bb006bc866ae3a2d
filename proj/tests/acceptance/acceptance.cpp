// Acceptance gate: one PASS/FAIL line per criterion.
// usage: acceptance [criterion ...]   (no arguments runs all of 1..14)
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "core/errors.hpp"
#include "core/grid.hpp"
#include "core/number_theory.hpp"
#include "exact/dissociated.hpp"
#include "exact/energy.hpp"
#include "exact/sumfree.hpp"
#include "fourier/dilation.hpp"
#include "fourier/kernels.hpp"
#include "fourier/series.hpp"
#include "freiman/dense_model.hpp"
#include "residue/residue.hpp"
#include "testfn/mps.hpp"

using namespace sf;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

IntegerSet random_set(std::mt19937_64& rng, std::size_t n, i64 lo, i64 hi) {
  std::set<i64> s;
  std::uniform_int_distribution<i64> d(lo, hi);
  while (s.size() < n) s.insert(d(rng));
  return make_set(std::vector<i64>(s.begin(), s.end()));
}

IntegerSet interval(i64 n) {
  std::vector<i64> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return make_set(v);
}

IntegerSet powers_of_two(int k) {
  std::vector<i64> v;
  for (int e = 0; e <= k; ++e) v.push_back(i64{1} << e);
  return make_set(v);
}

double grid_l1(const TrigPolynomial& p, int over = 8) { return norm_lp(p, 1, grid_for(p, over)); }

// the ensemble shared by criteria 4 and 5
std::vector<IntegerSet> sift_ensemble() {
  std::mt19937_64 rng(404);
  std::vector<IntegerSet> out;
  for (int i = 0; i < 10; ++i) out.push_back(random_set(rng, 8, 1, 50));
  return out;
}

Outcome c1() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(1);
  Outcome o;
  std::size_t bad = 0;
  for (int it = 0; it < 500; ++it) {
    const std::size_t n = 5 + rng() % 10;
    auto A = random_set(rng, n, 1, 50);
    auto s = max_sum_free(A);
    auto d = erdos_dilation_bound(A);
    const std::size_t floor_n = (n + 4) / 3;
    if (s.timed_out || s.size < floor_n || d.count > s.size || !is_sum_free(d.witness)) ++bad;
  }
  const double t = seconds_since(t0);
  o.pass = bad == 0 && t < 60;
  o.detail = fmt("500 instances, %.0f failures, %.2f s", static_cast<double>(bad), t);
  return o;
}

// max over every cell between consecutive breakpoints k/(3|a|), by exact
// integer arithmetic at the cell midpoints (2j+1)/(2L), L = lcm(3|a|)
std::size_t brute_dilation(const IntegerSet& A) {
  i64 L = 1;
  for (i64 a : A.elements) L = std::lcm(L, 3 * std::abs(a));
  std::size_t best = 0;
  for (i64 j = 0; j < L; ++j) {
    std::size_t c = 0;
    for (i64 a : A.elements) {
      // a(2j+1)/(2L) mod 1 in (1/3, 2/3)
      const i64 r = mod_pos(a * (2 * j + 1), 2 * L);
      if (3 * r > 2 * L && 3 * r < 4 * L) ++c;
    }
    best = std::max(best, c);
  }
  return best;
}

Outcome c2() {
  std::mt19937_64 rng(2);
  Outcome o;
  std::size_t negative = 0, mismatch = 0, small = 0;
  for (int it = 0; it < 500; ++it) {
    const bool tiny = it % 2 == 0;
    const std::size_t n = tiny ? 1 + rng() % 8 : 5 + rng() % 10;
    auto A = random_set(rng, n, 1, tiny ? 20 : 50);
    auto d = erdos_dilation_bound(A);
    if (d.value < 0) ++negative;
    if (tiny) {
      ++small;
      const std::size_t b = brute_dilation(A);
      const double bv = static_cast<double>(b) - static_cast<double>(A.size()) / 3.0;
      if (b != d.count || bv != d.value || !d.exact) ++mismatch;
    }
  }
  o.pass = negative == 0 && mismatch == 0;
  o.detail = fmt("negative values %.0f, brute-force mismatches %.0f of %.0f", static_cast<double>(negative),
                 static_cast<double>(mismatch), static_cast<double>(small));
  return o;
}

Outcome c3() {
  auto t0 = Clock::now();
  const i64 M = 10000;
  // phi - 1/3 = -(sqrt 3 / pi) sum chi(n)/n cos(2 pi n x)
  auto F = build_FA(make_set({1}), M).F.scaled(-std::sqrt(3.0) / std::numbers::pi);
  const std::size_t L = 1 << 17;
  auto v = evaluate_folded(F, L);
  double worst = 0;
  std::size_t used = 0;
  for (int j = 0; j < 1000; ++j) {
    // 1000 points j/1000 on the dyadic grid would be inexact; take the nearest grid point
    const std::size_t idx = static_cast<std::size_t>(std::llround(static_cast<double>(j) / 1000 * L)) % L;
    const double x = static_cast<double>(idx) / L;
    if (std::abs(x - 1.0 / 3) < 0.01 || std::abs(x - 2.0 / 3) < 0.01) continue;
    ++used;
    worst = std::max(worst, std::abs(v[idx] - phi_minus_third(x)));
  }
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = worst <= 0.05 && t < 5;
  o.detail = fmt("sup error %.3g over %.0f points, %.2f s", worst, static_cast<double>(used), t);
  return o;
}

Outcome c4() {
  const double Q = 5;
  const i64 M = 1000000;
  const std::size_t L = std::size_t{1} << 20;
  std::mt19937_64 rng(44);
  double worst = 0;
  for (const auto& A : sift_ensemble()) {
    // right side
    auto rhs = evaluate_folded(build_cA(A) + build_RQ(A, Q, M), L);
    // left side: sum_k mu(k) chi(k)/k F(kx) over squarefree k | prod_{p<=Q} p,
    // the k-th dilate carrying the series up to M/k
    std::vector<i64> ps = primes_upto(static_cast<i64>(Q));
    std::vector<std::pair<i64, double>> ks;
    for (std::size_t m = 0; m < (std::size_t{1} << ps.size()); ++m) {
      i64 k = 1;
      for (std::size_t b = 0; b < ps.size(); ++b)
        if (m >> b & 1) k *= ps[b];
      if (chi(k) == 0) continue;
      ks.emplace_back(k, mobius(k) * chi(k) / static_cast<double>(k));
    }
    std::vector<GridValues> fk;
    for (auto [k, w] : ks) fk.push_back(evaluate_folded(build_FA(A, M / k).F, L));
    for (int s = 0; s < 10; ++s) {
      const std::size_t j = rng() % L;
      cplx lhs = 0;
      for (std::size_t i = 0; i < ks.size(); ++i)
        lhs += ks[i].second * fk[i][(static_cast<std::size_t>(ks[i].first) * j) % L];
      worst = std::max(worst, std::abs(lhs - rhs[j]));
    }
  }
  Outcome o;
  o.pass = worst <= 1e-3;
  o.detail = fmt("max |lhs - rhs| = %.3g at 100 dyadic points", worst);
  return o;
}

Outcome c5() {
  double worst = 0;
  for (const auto& A : sift_ensemble()) {
    const double N = static_cast<double>(A.size());
    const double Q = 100 * N * N;
    worst = std::max(worst, build_RQ(A, Q, static_cast<i64>(10 * Q)).l2_norm());
  }
  Outcome o;
  o.pass = worst <= 0.1;
  o.detail = fmt("max ||R_Q||_2 = %.4g", worst);
  return o;
}

Outcome c6() {
  Outcome o;
  double max_l1 = 0;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1, 1);
  for (i64 T : {4, 16, 64, 256}) {
    auto v = vp_kernel(T);
    for (i64 n = -3 * T; n <= 3 * T; ++n) {
      const i64 a = std::abs(n);
      const double want = a <= T ? 1.0 : a < 2 * T ? static_cast<double>(2 * T - a) / static_cast<double>(T) : 0.0;
      if (v.coeff(n) != cplx(want)) o.pass = false;
    }
    const double l1 = grid_l1(v);
    max_l1 = std::max(max_l1, l1);
    if (l1 > 3) o.pass = false;
    std::vector<Term> t;
    for (i64 n = -T; n <= T; ++n) t.emplace_back(n, cplx(u(rng), u(rng)));
    auto f = TrigPolynomial::from_terms(t);
    if (max_coeff_diff(convolve(f, v), f) != 0.0) o.pass = false;
  }
  o.detail = fmt("max grid ||V_T||_1 = %.4f", max_l1);
  return o;
}

Outcome c7() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  double diff = 0, excess = -kInf;
  for (int it = 0; it < 100; ++it) {
    const i64 deg = 1 + static_cast<i64>(rng() % 100);
    std::vector<Term> t;
    for (i64 n = -deg; n <= deg; ++n) t.emplace_back(n, cplx(u(rng), u(rng)));
    auto f = TrigPolynomial::from_terms(t);
    const i64 q = 2 + static_cast<i64>(rng() % 15), ell = static_cast<i64>(rng() % 31) - 15;
    auto g = grid_for(f);
    auto shifts = project_residue_by_shifts(f, ell, q, g);
    auto filtered = evaluate(project_residue(f, ell, q), g);
    for (std::size_t j = 0; j < shifts.size(); ++j) diff = std::max(diff, std::abs(shifts[j] - filtered[j]));
    excess = std::max(excess, grid_norm(filtered, 1) - grid_norm(evaluate(f, g), 1));
  }
  Outcome o;
  o.pass = diff <= 1e-10 && excess <= 1e-9;
  o.detail = fmt("form difference %.3g, max ||Proj f||_1 - ||f||_1 = %.3g", diff, excess);
  return o;
}

Outcome c8() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  double sup_basic = 0, sup_dim = 0, sup_an = 0, sup_mod = 0;
  std::size_t errors = 0;
  auto random_poly = [&](const std::vector<i64>& supp) {
    std::vector<Term> t;
    for (i64 n : supp) t.emplace_back(n, cplx(u(rng), u(rng)));
    return TrigPolynomial::from_terms(t);
  };
  for (int it = 0; it < 100; ++it) {
    try {
      // basic: random f on [1, 128], consecutive blocks of growing size
      std::vector<i64> supp(128);
      std::iota(supp.begin(), supp.end(), 1);
      MpsConfig cfg;
      cfg.f = random_poly(supp);
      i64 start = 1, len = 1 + static_cast<i64>(rng() % 4);
      while (start + len - 1 <= 128) {
        std::vector<i64> b(static_cast<std::size_t>(len));
        std::iota(b.begin(), b.end(), start);
        cfg.blocks.push_back(make_set(b));
        start += len;
        len *= 2 + static_cast<i64>(rng() % 3);
      }
      sup_basic = std::max(sup_basic, mps_basic(cfg).sup_norm);

      // dimension: greedily dissociated random support
      std::vector<i64> d;
      while (d.size() < 10) {
        const i64 x = 1 + static_cast<i64>(rng() % 5000);
        d.push_back(x);
        if (!is_dissociated(make_set(d))) d.pop_back();
      }
      auto D = make_set(d);
      auto f = random_poly(d) + random_poly({1, 2, 3});
      sup_dim = std::max(sup_dim, dimension_certificate(f, D, grid_norm(evaluate(f, grid_for(f)), kInf)).sup_norm);

      // analytic: K^2 >= ratio so the first block fits
      AnalyticOptions ao;
      ao.ratio = 2 + static_cast<i64>(rng() % 9);
      ao.oversample = 8;
      const double K = std::sqrt(static_cast<double>(ao.ratio)) * (1 + static_cast<double>(rng() % 3));
      auto B1 = random_set(rng, 60 + rng() % 200, 1, 600);
      auto B2 = random_set(rng, rng() % 100, 601, 1000);
      auto E = random_poly({5, 17, 250});
      E = E.scaled(0.9 * std::sqrt(static_cast<double>(B1.size())) / K / E.l2_norm());
      sup_an = std::max(sup_an, mps_analytic(B1, B2, E, K, ao).sup_norm);

      // modular: nested classes r_i mod 2^i with roughly tenfold growth
      std::vector<i64> all;
      std::vector<std::pair<i64, i64>> chain;
      std::size_t sz = 1 + rng() % 4;
      const int J = 2 + static_cast<int>(rng() % 2);
      for (int i = 1; i <= J; ++i) {
        const i64 q = i64{1} << i, r = q / 2;  // n = 2^{i-1} mod 2^i
        std::set<i64> cls;
        while (cls.size() < sz) cls.insert(r + q * static_cast<i64>(rng() % (4 * sz + 8)));
        all.insert(all.end(), cls.begin(), cls.end());
        chain.emplace_back(r, q);
        sz = sz * (5 + rng() % 6);
      }
      auto B = make_set(all);
      sup_mod = std::max(sup_mod, mps_modular(B, chain, TrigPolynomial()).sup_norm);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion 8, configuration %d: %s\n", it, e.what());
      ++errors;
    }
  }
  const double worst = std::max({sup_basic, sup_dim, sup_an, sup_mod});
  Outcome o;
  o.pass = errors == 0 && worst <= 10 + 1e-6;
  o.detail = fmt("sup |Phi| basic %.3f, dimension %.3f, analytic %.3f", sup_basic, sup_dim, sup_an) +
             fmt(", modular %.3f; %.0f errors", sup_mod, static_cast<double>(errors));
  return o;
}

Outcome c9() {
  auto t0 = Clock::now();
  Outcome o;
  for (i64 N : {16, 64, 256, 1024}) {
    auto B = interval(N);
    auto f = TrigPolynomial::indicator(B);
    const double l1 = grid_l1(f);
    const double ratio = l1 / std::log(static_cast<double>(N));
    const bool band = ratio >= 0.30 && ratio <= 0.60;
    // every certificate must sit below the norm
    AnalyticOptions ao;
    ao.ratio = 2;
    double best = 0;
    bool below = true;
    auto push = [&](const CertifiedBound& c) {
      below = below && c.lower_bound <= l1 + 1e-9;
      best = std::max(best, c.lower_bound);
    };
    push(mps_analytic(B, IntegerSet{}, TrigPolynomial(), std::floor(std::sqrt(static_cast<double>(N))), ao));
    MpsConfig cfg;
    cfg.f = f;
    for (i64 lo = 1; lo <= N; lo *= 2) {
      std::vector<i64> b;
      for (i64 x = lo; x < 2 * lo && x <= N; ++x) b.push_back(x);
      cfg.blocks.push_back(make_set(b));
    }
    push(mps_basic(cfg));
    push(dimension_certificate(f, powers_of_two(static_cast<int>(std::log2(static_cast<double>(N)))),
                               static_cast<double>(N)));
    o.pass = o.pass && band && below;
    o.detail += fmt("N=%.0f l1/lnN=%.3f best cert %.3f; ", static_cast<double>(N), ratio, best);
  }
  const double t = seconds_since(t0);
  o.pass = o.pass && t < 120;
  o.detail += fmt("%.2f s", t);
  return o;
}

Outcome c10() {
  std::vector<i64> v{1, 3};
  for (i64 j = 0; j < 32; ++j) v.push_back(2 + 4 * j);
  for (i64 j = 0; j < 512; ++j) v.push_back(4 + 8 * j);
  auto c = mps_modular(make_set(v), {{1, 2}, {2, 4}, {4, 8}}, TrigPolynomial());
  double lattice = 0;
  for (const auto& a : c.audit)
    if (a.name.find("lattice_support") != std::string::npos) lattice = std::max(lattice, a.value);
  Outcome o;
  o.pass = c.J == 3 && lattice <= 1e-16 && c.lower_bound >= 0.04 * 3 && c.audit_ok();
  o.detail = fmt("off-lattice mass %.3g, certificate %.4f vs %.2f", lattice, c.lower_bound, 0.04 * 3) +
             (c.audit_ok() ? ", audits pass" : ", audit failure");
  return o;
}

Outcome c11() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(11);
  std::size_t bad = 0;
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 2 + rng() % 9;
    auto A0 = random_set(rng, n, 1, 12);
    const i64 d = 1000 + static_cast<i64>(rng() % 999001);
    auto A = dilate(A0, d);
    auto m = dense_model(A, 4, 1);
    const double k = static_cast<double>(m.k_max);
    const bool radius_ok = static_cast<double>(m.final_radius) <= std::pow(8 * k, k);
    const bool iso = m.verification_run && m.verified && check_f_ell_isomorphism(m.original, m.model, 4);
    const bool same_s = max_sum_free(A).size == max_sum_free(make_set(m.model)).size;
    if (!(radius_ok && iso && same_s)) ++bad;
  }
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = bad == 0 && t < 120;
  o.detail = fmt("50 instances, %.0f failures, %.2f s", static_cast<double>(bad), t);
  return o;
}

Outcome c12() {
  std::mt19937_64 rng(12);
  std::size_t partition_bad = 0, class_bad = 0, chain_bad = 0;
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 20;
    auto A = random_set(rng, n, 1, 1 + static_cast<i64>(rng() % 3000) + static_cast<i64>(n));
    const double q1 = 2 + static_cast<double>(rng() % 12);
    auto t = decompose(A, q1);
    std::vector<i64> seen;
    for (const auto& [sig, m] : t.classes)
      for (i64 a : m) {
        if (!(signature_of(a, t.primes) == sig)) ++partition_bad;
        seen.push_back(a);
      }
    std::sort(seen.begin(), seen.end());
    if (seen != A.elements) ++partition_bad;
    if (!largest_class(t, additive_dimension(A, DimensionMode::Exact).dimension).bound_ok) ++class_bad;
    if (!audit_chain(t, find_chain(t, 10, 1)).ok()) ++chain_bad;
  }
  Outcome o;
  o.pass = partition_bad == 0 && class_bad == 0 && chain_bad == 0;
  o.detail = fmt("200 pairs: partition failures %.0f, class bound failures %.0f, chain audit failures %.0f",
                 static_cast<double>(partition_bad), static_cast<double>(class_bad), static_cast<double>(chain_bad));
  return o;
}

Outcome c13() {
  Outcome o;
  const bool e19 = additive_energy(make_set({1, 2, 3})) == 19;
  std::size_t closed_bad = 0;
  for (i64 n = 1; n <= 200; ++n)
    if (additive_energy(interval(n)) != static_cast<std::uint64_t>((2 * n * n * n + n) / 3)) ++closed_bad;
  // random f on [1, 64], |f| in [0.5, 1.5], uniform phases; X = {|f| >= 1/2}
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> mag(0.5, 1.5), ph(0, 2 * std::numbers::pi);
  double min_ratio = kInf;
  for (int it = 0; it < 50; ++it) {
    std::vector<Term> t;
    for (i64 n = 1; n <= 64; ++n) t.emplace_back(n, std::polar(mag(rng), ph(rng)));
    auto f = TrigPolynomial::from_terms(t);
    auto r = energy_inverse_check(f, {interval(64)});
    if (!r.min_ok) closed_bad += 1000;
    min_ratio = std::min(min_ratio, r.energy_ratio[0]);
  }
  o.pass = e19 && closed_bad == 0 && min_ratio >= 0.01;
  o.detail = std::string("E({1,2,3}) ") + (e19 ? "= 19" : "!= 19") +
             fmt(", closed form failures %.0f, min corollary ratio %.4g", static_cast<double>(closed_bad), min_ratio);
  return o;
}

Outcome c14() {
  Outcome o;
  double prev = -kInf;
  bool monotone = true, below = true;
  for (int k = 4; k <= 14; ++k) {
    auto B = powers_of_two(k);
    auto f = TrigPolynomial::indicator(B);
    auto c = dimension_certificate(f, B, static_cast<double>(B.size()));
    const double l1 = grid_l1(f);
    // J = 1 certificates equal 1 up to rounding
    if (c.lower_bound < prev - 1e-9) monotone = false;
    if (c.lower_bound > l1 + 1e-9) below = false;
    prev = c.lower_bound;
    o.detail += fmt("k=%.0f %.3f/%.3f ", k, c.lower_bound, l1);
  }
  o.pass = monotone && below;
  o.detail = std::string(monotone ? "monotone" : "NOT monotone") + (below ? ", below norm: " : ", ABOVE norm: ") + o.detail;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::function<Outcome()> criteria[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, c14};
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > 14) {
      std::fprintf(stderr, "usage: acceptance [1-14 ...]\n");
      return 2;
    }
    which.push_back(n);
  }
  if (which.empty())
    for (int n = 1; n <= 14; ++n) which.push_back(n);
  int failed = 0;
  for (int n : which) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[n - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %2d: %s\n", o.pass ? "PASS" : "FAIL", n, o.detail.c_str());
    std::fprintf(stderr, "criterion %d took %.2f s\n", n, seconds_since(t0));
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
