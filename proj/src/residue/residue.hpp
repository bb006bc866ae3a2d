#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/integer_set.hpp"

namespace sf {

struct ResidueSignature {
  std::vector<i64> r;   // unit residue modulo each prime p <= q1, in prime order
  std::vector<int> nu;  // exponent of each prime p <= q1

  auto operator<=>(const ResidueSignature&) const = default;
};

// mu < nu: coordinatewise <= with at least one strict coordinate.
bool precedes(const std::vector<int>& mu, const std::vector<int>& nu);
bool precedes_or_equal(const std::vector<int>& mu, const std::vector<int>& nu);

struct ResidueTree {
  double q1 = 0;
  std::vector<i64> primes;
  std::map<ResidueSignature, std::vector<i64>> classes;
  std::size_t N = 0;

  i64 prime_product() const;
  // residue r (per prime) combined into [0, prod p) by CRT
  i64 canonical(const std::vector<i64>& r) const;
  std::vector<i64> split(i64 r) const;
  // largest class at exponent vector nu; first maximiser by canonical residue
  std::pair<ResidueSignature, std::size_t> level_max(const std::vector<int>& nu) const;
  std::vector<std::vector<int>> levels() const;
  std::size_t class_size(const ResidueSignature& s) const;
};

ResidueSignature signature_of(i64 a, const std::vector<i64>& primes);
ResidueTree decompose(const IntegerSet& a, double q1);

struct LargestClass {
  ResidueSignature signature;
  std::size_t size = 0;
  double bound = 0;  // N / (dim^{pi(Q1)} prod p)
  bool bound_ok = false;
};

LargestClass largest_class(const ResidueTree& t, std::size_t dim_bound);

struct ChainStep {
  ResidueSignature signature;
  std::vector<i64> members;
};

struct Chain {
  std::vector<ChainStep> steps;
  double growth = 10;
};

// Longest chain with strictly increasing exponent vectors, growth at least g
// between consecutive classes and a per-level maximiser at every step. The
// top class must have at least seed_threshold elements.
Chain find_chain(const ResidueTree& t, double g, std::size_t seed_threshold);

struct ChainAudit {
  bool strict_order = true;
  bool growth = true;
  bool maximal = true;
  bool members_match = true;
  bool ok() const { return strict_order && growth && maximal && members_match; }
  std::string detail;
};

ChainAudit audit_chain(const ResidueTree& t, const Chain& c);

// One element per distinct p-adic valuation.
std::vector<i64> valuation_witness(const IntegerSet& a, i64 p);

struct PredecessorInfo {
  std::vector<int> nu;
  std::size_t max_class = 0;
  bool clears = false;
  bool minimal_clearing = false;
};

struct MuContribution {
  std::vector<int> mu;
  i64 k = 1;
  std::size_t max_class = 0;
  double e_norm = 0;   // ||E_mu * V_T||_2
  double bound = 0;    // (log N)^{-2} |A(r,nu)|^{1/2}
  double ratio = 0;
};

struct DichotomyReport {
  ResidueSignature top;
  std::size_t top_size = 0;
  double scale = 0;  // the (log N)^4 factor (or override)
  std::vector<PredecessorInfo> predecessors;
  bool predecessor_clears = false;
  std::vector<MuContribution> contributions;
  double decomposition_max_diff = 0;  // projection vs reassembled pieces
  std::size_t projection_terms = 0;
  std::vector<i64> medium_primes_range;  // {Q1 exclusive, Q inclusive}
};

DichotomyReport dichotomy_probe(const IntegerSet& a, double q1, double q, i64 T, i64 M,
                                double scale = 0);

std::string signature_string(const ResidueTree& t, const ResidueSignature& s);

}  // namespace sf
