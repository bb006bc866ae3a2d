#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/grid.hpp"
#include "core/integer_set.hpp"
#include "core/trig_poly.hpp"

namespace sf {

struct AuditItem {
  std::string name;
  double value = 0;
  double limit = 0;  // pass iff value <= limit
  bool pass = false;
};

struct CertifiedBound {
  std::string variant;
  std::size_t grid_size = 0;
  std::size_t J = 0;
  GridValues phi;             // Phi_J at j / grid_size
  double sup_norm = 0;        // grid max |Phi_J|
  double inner_product = 0;   // Re <target, Phi_J> on the grid
  double lower_bound = 0;     // inner_product / sup_norm
  double grid_l1 = 0;         // grid ||target||_1
  std::vector<AuditItem> audit;
  std::vector<std::pair<std::string, double>> ledger;
  bool downgraded = false;    // analytic variant: spectral leakage above tolerance

  bool audit_ok() const;
  double ledger_value(const std::string& key) const;  // NaN when absent
};

struct MpsConfig {
  std::vector<IntegerSet> blocks;
  TrigPolynomial f;
  int oversample = 8;
  double tol = 1e-9;
};

CertifiedBound mps_basic(const MpsConfig& cfg);

// Single dissociated block, J = floor(sqrt(|D| / log N_inf)) (at least 1).
CertifiedBound dimension_certificate(const TrigPolynomial& f, const IntegerSet& D, double N_inf,
                                     int oversample = 8, double tol = 1e-9);

struct AnalyticOptions {
  i64 ratio = 100;      // |A_{i+1}| / |A_i|
  int oversample = 32;
  double drop = 1e-14;  // coefficients of |g_i^| below this are discarded
  double tol = 1e-6;
};

// Blocks A_i are the base * ratio^i smallest unused elements of B1 u B2,
// base = floor(|B1 u B2| / K^2), for i = 1, 2, ... while they fit.
CertifiedBound mps_analytic(const IntegerSet& B1, const IntegerSet& B2, const TrigPolynomial& E,
                            double K, const AnalyticOptions& opt = {});

// chain: (r_i, q_i); B_i = B n {n = r_i mod q_i}.
CertifiedBound mps_modular(const IntegerSet& B, const std::vector<std::pair<i64, i64>>& chain,
                           const TrigPolynomial& E, int oversample = 8, double tol = 1e-9);

struct EnergyPair {
  std::size_t j = 0, jp = 0;
  std::uint64_t energy = 0;
  double ratio = 0;  // E N K^2 / (|X_j|^2 |X_j'|^2)
};

struct EnergyReport {
  double f_l1 = 0;       // grid
  double f_l2 = 0;
  double N = 0;
  double c_l2 = 0;       // ||f^||_2 / N^{1/2}
  std::size_t K = 0;
  std::size_t K_required = 0;  // ceil(100 ||f^||_1)
  std::vector<double> min_abs_f;
  bool min_ok = true;    // |f| >= 1/2 on every X_i
  std::vector<EnergyPair> pairs;
  double max_ratio = 0;
  std::vector<std::uint64_t> self_energy;
  std::vector<double> energy_ratio;  // E(X) N ||f^||_1^2 / |X|^4
};

// N <= 0 means N = ||f^||_2^2.
EnergyReport energy_inverse_check(const TrigPolynomial& f, const std::vector<IntegerSet>& X,
                                  double N = 0, int oversample = 8);

struct RudinCheck {
  double p = 0;
  double lp = 0;
  double l2 = 0;
  double ratio = 0;  // lp / (sqrt(p) l2)
  bool holds = false;  // ratio <= 10
};

// f must have dissociated support.
RudinCheck rudin_check(const TrigPolynomial& f, double p, int oversample = 8);

}  // namespace sf
