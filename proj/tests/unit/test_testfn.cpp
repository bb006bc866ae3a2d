#include <doctest.h>

#include <cmath>
#include <random>

#include "core/errors.hpp"
#include "core/grid.hpp"
#include "exact/energy.hpp"
#include "testfn/mps.hpp"

using namespace sf;

namespace {

IntegerSet progression(i64 start, i64 step, i64 count) {
  std::vector<i64> v;
  for (i64 j = 0; j < count; ++j) v.push_back(start + step * j);
  return make_set(v);
}

IntegerSet unite(std::vector<IntegerSet> parts) {
  std::vector<i64> v;
  for (auto& p : parts) v.insert(v.end(), p.elements.begin(), p.elements.end());
  return make_set(v);
}

}  // namespace

TEST_SUITE("testfn") {

TEST_CASE("basic certificate for a single frequency") {
  MpsConfig cfg;
  cfg.blocks = {make_set({1})};
  cfg.f = TrigPolynomial::monomial(1);
  auto c = mps_basic(cfg);
  CHECK(c.J == 1);
  CHECK(c.sup_norm <= 1.0 + 1e-12);
  CHECK(c.inner_product == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.lower_bound == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.ledger_value("block1.inner_fg") == doctest::Approx(1.0));
  CHECK(std::isnan(c.ledger_value("missing")));
  CHECK(c.audit_ok());
}

TEST_CASE("basic certificates stay below the grid norm") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int it = 0; it < 30; ++it) {
    std::vector<Term> t;
    for (i64 n = 1; n <= 64; ++n) t.emplace_back(n, cplx(u(rng), u(rng)));
    MpsConfig cfg;
    cfg.f = TrigPolynomial::from_terms(t);
    cfg.blocks = {progression(1, 1, 4), progression(5, 1, 12), progression(17, 1, 48)};
    auto c = mps_basic(cfg);
    REQUIRE(c.sup_norm <= 10 + 1e-6);
    REQUIRE(c.lower_bound <= c.grid_l1 + 1e-9);
    REQUIRE(c.audit_ok());
  }
}

TEST_CASE("basic rejects blocks off the support") {
  MpsConfig cfg;
  cfg.blocks = {make_set({5})};
  cfg.f = TrigPolynomial::monomial(1);
  CHECK_THROWS_AS(mps_basic(cfg), PreconditionError);
}

TEST_CASE("dimension certificate") {
  auto c = dimension_certificate(TrigPolynomial::monomial(1), make_set({1}), 1);
  CHECK(c.J == 1);
  CHECK(c.lower_bound == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.audit_ok());
  CHECK_THROWS_AS(dimension_certificate(TrigPolynomial::monomial(1), make_set({1, 2, 3}), 1),
                  PreconditionError);
  std::vector<i64> pw;
  for (int k = 0; k <= 10; ++k) pw.push_back(i64{1} << k);
  auto B = make_set(pw);
  auto d = dimension_certificate(TrigPolynomial::indicator(B), B, static_cast<double>(B.size()));
  CHECK(d.J == static_cast<std::size_t>(std::floor(std::sqrt(11 / std::log(11.0)))));
  CHECK(d.lower_bound <= d.grid_l1 + 1e-9);
  CHECK(d.audit_ok());
}

TEST_CASE("analytic certificate") {
  // 111 elements and K = 10 give base 1, so blocks of 10 and 100
  auto B1 = progression(1, 1, 11), B2 = progression(12, 1, 100);
  AnalyticOptions opt;
  opt.ratio = 10;
  auto c = mps_analytic(B1, B2, TrigPolynomial(), 10, opt);
  CHECK(c.J == 2);
  CHECK(c.ledger_value("block1.size") == 10);
  CHECK(c.ledger_value("block2.size") == 100);
  CHECK(c.sup_norm <= 10 + 1e-6);
  CHECK(c.lower_bound <= c.grid_l1 + 1e-9);
  CHECK_THROWS_AS(mps_analytic(make_set({1}), make_set({2}), TrigPolynomial(), 1), PreconditionError);
}

TEST_CASE("modular certificate on the nested instance") {
  auto B = unite({make_set({1, 3}), progression(2, 4, 32), progression(4, 8, 512)});
  auto c = mps_modular(B, {{1, 2}, {2, 4}, {4, 8}}, TrigPolynomial());
  CHECK(c.J == 3);
  CHECK(c.audit_ok());
  CHECK(c.lower_bound >= 0.04 * 3);
  CHECK(c.ledger_value("block3.size") == 512);
  CHECK(c.lower_bound <= c.grid_l1 + 1e-9);
}

TEST_CASE("modular hypotheses are audited, not thrown") {
  auto B = unite({make_set({1, 3}), progression(2, 4, 32)});
  // 3 does not divide 4, and class sizes 2 -> 32 exceed tenfold growth only barely
  auto c = mps_modular(B, {{1, 3}, {2, 4}}, TrigPolynomial());
  CHECK_FALSE(c.audit_ok());
}

TEST_CASE("energy report") {
  auto s = energy_inverse_check(TrigPolynomial::monomial(3), {make_set({3})});
  CHECK(s.N == doctest::Approx(1.0));
  CHECK(s.self_energy[0] == 1);
  CHECK(s.energy_ratio[0] == doctest::Approx(s.N * s.f_l1 * s.f_l1));
  CHECK(s.min_ok);
  auto I = progression(1, 1, 3);
  auto r = energy_inverse_check(TrigPolynomial::indicator(I), {I, make_set({1, 2})});
  CHECK(r.K == 2);
  CHECK(r.self_energy[0] == 19);
  CHECK(r.pairs.size() == 1);
  CHECK(r.pairs[0].energy == additive_energy(I, make_set({1, 2})));
  CHECK(r.K_required == static_cast<std::size_t>(std::ceil(100 * r.f_l1)));
}

TEST_CASE("Rudin inequality on lacunary polynomials") {
  std::vector<i64> pw;
  for (int k = 0; k < 12; ++k) pw.push_back(i64{1} << k);
  auto f = TrigPolynomial::indicator(make_set(pw));
  for (double p : {2.0, 4.0, 8.0}) {
    auto r = rudin_check(f, p);
    CHECK(r.holds);
  }
  CHECK(rudin_check(f, 2).ratio == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK_THROWS_AS(rudin_check(TrigPolynomial::indicator(make_set({1, 2, 3})), 4), PreconditionError);
}

}
