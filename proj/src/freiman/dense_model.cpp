#include "freiman/dense_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "core/errors.hpp"
#include "core/number_theory.hpp"
#include "exact/dissociated.hpp"
#include "exact/energy.hpp"
#include "exact/sumfree.hpp"

namespace sf {

i64 centred(i64 x, i64 p) {
  i64 r = mod_pos(x, p);
  return (2 * r > p) ? r - p : r;
}

namespace {

i64 image_radius(const std::vector<i64>& b, i64 lambda, i64 p) {
  i64 m = 0;
  for (i64 x : b) m = std::max(m, std::abs(centred(mul_mod(mod_pos(x, p), lambda, p), p)));
  return m;
}

}  // namespace

Rectification rectify_mod_p(const std::vector<i64>& b, i64 p, std::size_t k,
                            const std::vector<i64>& dissociated, i64 sweep_limit) {
  if (!is_prime(p)) throw PreconditionError("rectify_mod_p: modulus must be prime");
  if (k == 0) throw PreconditionError("rectify_mod_p: k must be positive");
  Rectification r;
  r.pigeonhole_bound = static_cast<double>(k) * std::pow(static_cast<double>(p), 1.0 - 1.0 / static_cast<double>(k));
  i64 best = -1, best_lambda = 0;
  auto consider = [&](i64 lam) {
    lam = mod_pos(lam, p);
    if (lam == 0) return;
    i64 rad = image_radius(b, lam, p);
    if (best < 0 || rad < best || (rad == best && lam < best_lambda)) {
      best = rad;
      best_lambda = lam;
    }
  };
  if (p <= sweep_limit) {
    for (i64 lam = 1; lam < p; ++lam) consider(lam);
    r.exhaustive = true;
  } else {
    if (dissociated.empty()) throw PreconditionError("rectify_mod_p: empty dissociated subset");
    const std::size_t kd = dissociated.size();
    if (kd == 1) {
      consider(mod_inverse(mod_pos(dissociated[0], p), p));
    } else {
      // boxes of side 1/s in each coordinate of (lambda d / p mod 1)_d
      const i64 s = static_cast<i64>(std::floor(std::pow(static_cast<double>(p), 1.0 / static_cast<double>(kd))));
      std::map<std::vector<i64>, i64> seen;
      std::size_t collisions = 0;
      std::vector<i64> key(kd);
      for (i64 lam = 0; lam < p && collisions < 256; ++lam) {
        for (std::size_t i = 0; i < kd; ++i) {
          i64 res = mul_mod(mod_pos(dissociated[i], p), lam, p);
          key[i] = static_cast<i64>((static_cast<i128>(res) * s) / p);
        }
        auto [it, fresh] = seen.emplace(key, lam);
        if (!fresh) {
          consider(lam - it->second);
          it->second = lam;
          ++collisions;
        }
      }
    }
    consider(1);
  }
  r.lambda = best_lambda;
  r.radius = best;
  r.within_bound = static_cast<double>(best) <= r.pigeonhole_bound;
  for (i64 x : b) r.image.push_back(centred(mul_mod(mod_pos(x, p), best_lambda, p), p));
  return r;
}

std::optional<std::pair<std::vector<i64>, ReductionStep>> reduce_once(
    const std::vector<i64>& a, int ell, std::size_t k, const std::vector<i64>& dissociated) {
  if (ell < 2) throw PreconditionError("reduce_once: ell must be at least 2");
  i64 m = 0;
  for (i64 x : a) m = std::max(m, std::abs(x));
  if (m == 0) throw PreconditionError("reduce_once: empty or zero set");
  const i64 lo = checked_mul(ell, m);
  const i64 p = smallest_prime_in(lo, checked_mul(2, lo));
  if (p == 0) throw PreconditionError("reduce_once: no prime in (ell m, 2 ell m]");
  Rectification rect = rectify_mod_p(a, p, k, dissociated);
  ReductionStep step;
  step.p = p;
  step.lambda = rect.lambda;
  step.k = k;
  step.radius_before = m;
  step.radius_after = rect.radius;
  step.pigeonhole_bound = rect.pigeonhole_bound;
  step.compression_condition = rect.pigeonhole_bound < static_cast<double>(m);
  step.exhaustive = rect.exhaustive;
  // the lift must stay inside (-p/ell, p/ell) for relations of length ell to transfer
  if (rect.radius >= m || static_cast<i128>(rect.radius) * ell >= p) return std::nullopt;
  return std::make_pair(rect.image, step);
}

ModelCertificate dense_model(const IntegerSet& a, int ell, int verify, std::size_t max_steps) {
  if (a.empty()) throw PreconditionError("dense_model: empty set");
  if (a.contains(0)) throw PreconditionError("dense_model: 0 in A");
  ModelCertificate c;
  c.ell = ell;
  c.original = a.elements;
  std::vector<i64> cur = a.elements;
  for (std::size_t step = 0;; ++step) {
    IntegerSet cs = make_set(cur);
    DimensionResult d = best_dimension(cs);
    c.dims.push_back(d.dimension);
    c.k_max = std::max(c.k_max, d.dimension);
    if (step == max_steps) {
      c.cap_hit = true;
      break;
    }
    auto next = reduce_once(cur, ell, d.dimension, d.witness.elements);
    if (!next) break;
    cur = std::move(next->first);
    c.chain.push_back(next->second);
  }
  // canonical sign: the largest magnitude element is positive
  i64 mx = 0;
  for (i64 x : cur)
    if (std::abs(x) > std::abs(mx) || (std::abs(x) == std::abs(mx) && x > mx)) mx = x;
  if (mx < 0)
    for (auto& x : cur) x = -x;
  c.model = cur;
  for (i64 x : cur) c.final_radius = std::max(c.final_radius, std::abs(x));
  c.radius_bound = std::pow(2.0 * ell * static_cast<double>(c.k_max), static_cast<double>(c.k_max));
  c.bound_ok = static_cast<double>(c.final_radius) <= c.radius_bound;
  const bool run = verify == 1 || (verify == -1 && a.size() <= 12);
  if (run && !c.cap_hit) {
    c.verification_run = true;
    c.iso_ok = check_f_ell_isomorphism(c.original, c.model, ell);
    c.s_original = max_sum_free(a).size;
    c.s_model = max_sum_free(make_set(c.model)).size;
    c.verified = c.iso_ok && c.s_original == c.s_model;
  }
  return c;
}

}  // namespace sf
