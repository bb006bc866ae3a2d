#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "core/errors.hpp"
#include "core/grid.hpp"
#include "core/number_theory.hpp"
#include "core/trig_poly.hpp"

using namespace sf;

TEST_SUITE("core") {

TEST_CASE("chi values") {
  CHECK(chi(1) == 1);
  CHECK(chi(2) == -1);
  CHECK(chi(6) == 0);
  CHECK(chi(-1) == -1);
}

TEST_CASE("chi is completely multiplicative") {
  for (i64 m = -1000; m <= 1000; m += 7)
    for (i64 n = -1000; n <= 1000; n += 3) REQUIRE(chi(m * n) == chi(m) * chi(n));
}

TEST_CASE("mobius values") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK_THROWS_AS(mobius(0), PreconditionError);
  CHECK_THROWS_AS(mobius(-3), PreconditionError);
}

TEST_CASE("mobius divisor sum is the indicator of 1") {
  for (i64 n = 1; n <= 10000; ++n) {
    int s = 0;
    for (i64 k = 1; k * k <= n; ++k)
      if (n % k == 0) {
        s += mobius(k);
        if (k * k != n) s += mobius(n / k);
      }
    REQUIRE(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("rough numbers") {
  CHECK(is_q_rough(7, 5));
  CHECK_FALSE(is_q_rough(6, 3));
  CHECK(is_q_rough(1, 1e6));
  CHECK_FALSE(is_q_rough(49, 7));
  CHECK(is_q_rough(49, 6.9));
}

TEST_CASE("primes") {
  CHECK(primes_upto(30) == std::vector<i64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1000001));
  CHECK(smallest_prime_in(100, 200) == 101);
  CHECK(smallest_prime_in(113, 126) == 0);  // none in (113, 126]
  CHECK(mod_inverse(7, 101) * 7 % 101 == 1);
}

TEST_CASE("integer sets") {
  CHECK(make_set({3, 1, 2, 3}).elements == std::vector<i64>{1, 2, 3});
  CHECK_THROWS_AS(make_set({0, 1}), PreconditionError);
  CHECK_THROWS_AS(validate_set({1, 1}), InputError);
  CHECK_THROWS_AS(validate_set({0, 2}), InputError);
  CHECK_NOTHROW(validate_set({0, 2}, true));
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), BudgetError);
}

TEST_CASE("evaluate: e(x) on 8 points gives the 8th roots of unity") {
  TorusGrid g{8, 4.0};
  auto v = evaluate(TrigPolynomial::monomial(0, 0.0) + TrigPolynomial::monomial(1), TorusGrid{16, 8.0});
  for (std::size_t j = 0; j < 16; ++j) {
    const double a = 2 * std::numbers::pi * static_cast<double>(j) / 16;
    CHECK(std::abs(v[j] - std::polar(1.0, a)) < 1e-12);
  }
  // M = 8 undersamples degree 1 under the 8x rule
  CHECK_THROWS_AS(evaluate(TrigPolynomial::monomial(1), g), PreconditionError);
  auto f = evaluate_folded(TrigPolynomial::monomial(1), 8);
  for (std::size_t j = 0; j < 8; ++j)
    CHECK(std::abs(f[j] - std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / 8)) < 1e-12);
}

TEST_CASE("evaluate: constant and cosine") {
  auto one = evaluate(TrigPolynomial::monomial(0), grid_for(0));
  for (auto x : one) CHECK(std::abs(x - 1.0) < 1e-15);
  auto c = evaluate(TrigPolynomial::cosine(1), TorusGrid{16, 8.0});
  CHECK(std::abs(c[4]) < 1e-12);  // x = 1/4
  CHECK(std::abs(c[0] - 1.0) < 1e-12);
}

TEST_CASE("norms") {
  auto e1 = TrigPolynomial::monomial(1);
  CHECK(norm_lp(e1, 1, grid_for(e1)) == doctest::Approx(1.0).epsilon(1e-12));
  auto b = TrigPolynomial::indicator(make_set({1, 2}));
  CHECK(norm_lp(b, 2, grid_for(b)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(norm_lp(b, 2, grid_for(b), NormMode::Exact) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  auto c = TrigPolynomial::cosine(1);
  CHECK(norm_lp(c, 1, grid_for(4096, 8)) == doctest::Approx(2 / std::numbers::pi).epsilon(1e-6));
  CHECK(norm_lp(c, INFINITY, grid_for(c)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(norm_lp(c, 0.5, grid_for(c)), PreconditionError);
}

TEST_CASE("convolve") {
  auto e1 = TrigPolynomial::monomial(1);
  auto r = convolve(e1, e1);
  CHECK(r.size() == 1);
  CHECK(r.coeff(1) == cplx(1.0));
  auto e3 = TrigPolynomial::monomial(3);
  auto g = TrigPolynomial::monomial(1) + TrigPolynomial::monomial(2);
  CHECK(convolve(e3, g).empty());
}

TEST_CASE("trig polynomial algebra") {
  auto p = TrigPolynomial::from_terms({{2, 1.0}, {-1, cplx(0, 1)}, {2, 0.5}, {5, 0.0}});
  CHECK(p.size() == 2);
  CHECK(p.coeff(2) == cplx(1.5));
  CHECK(p.degree() == 2);
  CHECK((p - p).empty());
  CHECK(p.dilated(3).coeff(6) == cplx(1.5));
  auto c = TrigPolynomial::from_cosines({{3, 2.0}, {1, 1.0}, {3, -2.0}});
  CHECK(c.size() == 2);
  CHECK(c.is_real());
  CHECK(c.coeff(-1) == cplx(0.5));
  CHECK(std::abs(p.eval_at(0.3) - p.conj_reflect().eval_at(0.3)) > 0);
  CHECK(std::abs(std::conj(p.eval_at(0.3)) - p.conj_reflect().eval_at(0.3)) < 1e-12);
}

TEST_CASE("Parseval on random real polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_int_distribution<int> deg(0, 512);
  for (int it = 0; it < 1000; ++it) {
    const int d = deg(rng);
    std::vector<std::pair<i64, double>> cs;
    for (int n = 1; n <= d; ++n) cs.emplace_back(n, u(rng));
    auto p = TrigPolynomial::from_cosines(cs) + TrigPolynomial::monomial(0, u(rng));
    const double exact = p.l2_norm();
    if (exact == 0) continue;
    REQUIRE(std::abs(norm_lp(p, 2, grid_for(p)) - exact) / exact <= 1e-10);
  }
}

TEST_CASE("grid inner product matches coefficient inner product") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int it = 0; it < 50; ++it) {
    std::vector<Term> a, b;
    for (int n = -40; n <= 40; ++n) {
      a.emplace_back(n, cplx(u(rng), u(rng)));
      if (n % 3 == 0) b.emplace_back(n, cplx(u(rng), u(rng)));
    }
    auto f = TrigPolynomial::from_terms(a), g = TrigPolynomial::from_terms(b);
    cplx direct = 0;
    for (const auto& [n, c] : f.terms()) direct += c * std::conj(g.coeff(n));
    auto grid = grid_for(40);
    cplx gi = grid_inner(evaluate(f, grid), evaluate(g, grid));
    REQUIRE(std::abs(gi - direct) <= 1e-10 * std::abs(direct));
  }
}

TEST_CASE("coefficients round-trip through the grid") {
  auto p = TrigPolynomial::from_terms({{-3, cplx(1, 2)}, {0, 0.25}, {7, -1.0}});
  auto q = coefficients_from_grid(evaluate(p, grid_for(p)), 1e-12);
  CHECK(max_coeff_diff(p, q) < 1e-14);
}

}
