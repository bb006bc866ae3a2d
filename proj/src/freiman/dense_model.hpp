#pragma once

#include <optional>
#include <vector>

#include "core/integer_set.hpp"

namespace sf {

struct Rectification {
  i64 lambda = 0;
  i64 radius = 0;             // max |centred lambda*b mod p|
  double pigeonhole_bound = 0;     // k p^{1-1/k}
  bool within_bound = false;
  bool exhaustive = false;    // found by full sweep rather than pigeonhole
  std::vector<i64> image;     // centred representatives in (-p/2, p/2], input order
};

// Centred representative of x mod p in (-p/2, p/2].
i64 centred(i64 x, i64 p);

// Finds a unit lambda mapping the residues b (mod prime p) into a short
// interval. dissociated: a maximal dissociated subset of the integer lift,
// used for the pigeonhole search when p > sweep_limit.
Rectification rectify_mod_p(const std::vector<i64>& b, i64 p, std::size_t k,
                            const std::vector<i64>& dissociated, i64 sweep_limit = 1'000'000);

struct ReductionStep {
  i64 p = 0;
  i64 lambda = 0;
  std::size_t k = 0;
  i64 radius_before = 0;
  i64 radius_after = 0;
  double pigeonhole_bound = 0;
  bool compression_condition = false;  // k p^{1-1/k} < m
  bool exhaustive = false;
};

// One compression step; nullopt when no lambda shrinks the radius while
// keeping the image inside (-p/ell, p/ell). a is mapped in its given order.
std::optional<std::pair<std::vector<i64>, ReductionStep>> reduce_once(
    const std::vector<i64>& a, int ell, std::size_t k, const std::vector<i64>& dissociated);

struct ModelCertificate {
  std::vector<i64> original;  // pairing order
  std::vector<i64> model;     // model[i] is the image of original[i]
  int ell = 4;
  std::vector<ReductionStep> chain;
  std::vector<std::size_t> dims;  // dimension bound measured at each stage
  std::size_t k_max = 0;
  i64 final_radius = 0;
  double radius_bound = 0;        // (2 ell k_max)^k_max
  bool bound_ok = false;
  bool verified = false;          // exhaustive check was run and passed
  bool verification_run = false;
  bool iso_ok = false;
  std::size_t s_original = 0, s_model = 0;
  bool cap_hit = false;
};

// verify: -1 auto (|A| <= 12), 0 never, 1 always.
ModelCertificate dense_model(const IntegerSet& a, int ell, int verify = -1,
                             std::size_t max_steps = 1000);

}  // namespace sf
