#include <doctest.h>

#include <random>
#include <set>

#include "core/errors.hpp"
#include "core/number_theory.hpp"
#include "exact/dissociated.hpp"
#include "residue/residue.hpp"

using namespace sf;

namespace {

IntegerSet chain_example() {
  std::vector<i64> v;
  for (i64 o = 1; o <= 31; o += 2) v.push_back(o);
  v.push_back(2);
  for (i64 o = 1; o <= 1024; o += 6) v.push_back(4 * o);
  return make_set(v);
}

}  // namespace

TEST_SUITE("residue") {

TEST_CASE("partial order on exponent vectors") {
  CHECK(precedes({0, 1}, {1, 1}));
  CHECK_FALSE(precedes({1, 1}, {1, 1}));
  CHECK(precedes_or_equal({1, 1}, {1, 1}));
  CHECK_FALSE(precedes({0, 2}, {1, 1}));
  CHECK_FALSE(precedes({1, 0}, {0, 1}));
}

TEST_CASE("signatures") {
  auto s = signature_of(12, {2, 3});
  CHECK(s.nu == std::vector<int>{2, 1});
  CHECK(s.r == std::vector<i64>{1, 1});
  auto t = signature_of(-5, {2, 3});
  CHECK(t.nu == std::vector<int>{0, 0});
  CHECK(t.r == std::vector<i64>{1, 1});  // -5 = 1 mod 2 and mod 3
}

TEST_CASE("decomposition of {1, 5, 7, 11}") {
  auto t = decompose(make_set({1, 5, 7, 11}), 3);
  CHECK(t.primes == std::vector<i64>{2, 3});
  CHECK(t.N == 4);
  CHECK(t.classes.size() == 2);
  CHECK(t.classes.at(ResidueSignature{{1, 1}, {0, 0}}) == std::vector<i64>{1, 7});
  CHECK(t.classes.at(ResidueSignature{{1, 2}, {0, 0}}) == std::vector<i64>{5, 11});
  CHECK(t.prime_product() == 6);
  CHECK(t.canonical({1, 2}) == 5);
  CHECK(t.split(5) == std::vector<i64>{1, 2});
}

TEST_CASE("decomposition partitions A") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    std::set<i64> s;
    const std::size_t n = 1 + rng() % 40;
    while (s.size() < n) s.insert(1 + static_cast<i64>(rng() % 500));
    auto A = make_set(std::vector<i64>(s.begin(), s.end()));
    const double q1 = 2 + static_cast<double>(rng() % 10);
    auto t = decompose(A, q1);
    std::multiset<i64> seen;
    for (const auto& [sig, m] : t.classes) {
      for (i64 a : m) {
        REQUIRE(signature_of(a, t.primes) == sig);
        seen.insert(a);
      }
    }
    REQUIRE(std::vector<i64>(seen.begin(), seen.end()) == A.elements);
  }
}

TEST_CASE("largest class") {
  auto t = decompose(make_set({2, 4, 8}), 2);
  auto lc = largest_class(t, additive_dimension(make_set({2, 4, 8}), DimensionMode::Exact).dimension);
  CHECK(lc.size == 1);
  CHECK(lc.bound == doctest::Approx(0.5));
  CHECK(lc.bound_ok);
}

TEST_CASE("largest class bound holds with the exact dimension") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    std::set<i64> s;
    const std::size_t n = 1 + rng() % 20;
    while (s.size() < n) s.insert(1 + static_cast<i64>(rng() % 300));
    auto A = make_set(std::vector<i64>(s.begin(), s.end()));
    auto t = decompose(A, 2 + static_cast<double>(rng() % 6));
    REQUIRE(largest_class(t, additive_dimension(A, DimensionMode::Exact).dimension).bound_ok);
  }
}

TEST_CASE("chain on the constructed example") {
  auto t = decompose(chain_example(), 2);
  auto c = find_chain(t, 10, 1);
  CHECK(c.steps.size() == 2);
  auto a = audit_chain(t, c);
  CHECK(a.ok());
  CHECK(c.steps.front().members.size() == 16);
  CHECK(c.steps.back().members.size() == 171);
}

TEST_CASE("chains found on random sets pass the audit") {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 100; ++it) {
    std::set<i64> s;
    const std::size_t n = 1 + rng() % 60;
    while (s.size() < n) s.insert(1 + static_cast<i64>(rng() % 2000));
    auto t = decompose(make_set(std::vector<i64>(s.begin(), s.end())), 3);
    auto c = find_chain(t, 1 + static_cast<double>(rng() % 3), 1);
    REQUIRE_FALSE(c.steps.empty());
    REQUIRE(audit_chain(t, c).ok());
  }
}

TEST_CASE("audit rejects a broken chain") {
  auto t = decompose(chain_example(), 2);
  auto c = find_chain(t, 10, 1);
  std::swap(c.steps[0], c.steps[1]);
  CHECK_FALSE(audit_chain(t, c).ok());
}

TEST_CASE("valuation witness") {
  auto w = valuation_witness(make_set({1, 3, 2, 6, 12, 24}), 2);
  CHECK(w.size() == 4);
  std::set<int> v;
  for (i64 x : w) v.insert(valuation(x, 2));
  CHECK(v.size() == 4);
}

TEST_CASE("dichotomy decomposition reassembles the projection") {
  auto d = dichotomy_probe(chain_example(), 2, 20, 4096, 8192);
  CHECK(d.decomposition_max_diff <= 1e-9);
  CHECK(d.medium_primes_range == std::vector<i64>{2, 20});
  CHECK_THROWS_AS(dichotomy_probe(chain_example(), 5, 3, 4096, 8192), PreconditionError);
}

}
