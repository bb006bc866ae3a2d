#include "cli/commands.hpp"

#include <cmath>
#include <set>

#include "cli/io.hpp"
#include "core/errors.hpp"
#include "core/grid.hpp"
#include "exact/dissociated.hpp"
#include "fourier/kernels.hpp"
#include "fourier/series.hpp"

namespace sf {

namespace {

class Opts {
 public:
  Opts(const Json& j, std::string cmd) : j_(j), cmd_(std::move(cmd)) {
    if (!j_.is_null() && !j_.is_object()) throw UsageError(cmd_ + ": options must be a JSON object");
  }

  bool has(const std::string& k) const { return j_.is_object() && j_.contains(k); }

  template <class T>
  T get(const std::string& k, T def) {
    used_.insert(k);
    if (!has(k)) return def;
    const Json& v = j_.at(k);
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) bad(k, "a boolean");
      return v.get<bool>();
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) bad(k, "a string");
      return v.get<std::string>();
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) bad(k, "a number");
      return v.get<T>();
    } else {
      if (!v.is_number_integer()) bad(k, "an integer");
      return v.get<T>();
    }
  }

  template <class T>
  T need(const std::string& k) {
    if (!has(k)) throw UsageError(cmd_ + ": missing required option '" + k + "'");
    return get<T>(k, T{});
  }

  void finish() const {
    if (!j_.is_object()) return;
    for (const auto& [k, v] : j_.items())
      if (!used_.count(k)) throw UsageError(cmd_ + ": unknown option '" + k + "'");
  }

 private:
  [[noreturn]] void bad(const std::string& k, const char* what) const {
    throw UsageError(cmd_ + ": option '" + k + "' must be " + what);
  }
  const Json& j_;
  std::string cmd_;
  std::set<std::string> used_;
};

const IntegerSet& need_set(const IntegerSet* s, const std::string& cmd) {
  if (!s) throw UsageError(cmd + ": a set is required");
  return *s;
}

CommandOutput cmd_exact(const IntegerSet& a, Opts& o) {
  SumFreeOptions so;
  so.time_limit_ms = o.get<i64>("time_limit_ms", so.time_limit_ms);
  so.allow_equal = !o.get<bool>("distinct", false);
  o.finish();
  CommandOutput out;
  out.report = to_json(max_sum_free(a, so));
  return out;
}

CommandOutput cmd_dilation(const IntegerSet& a, Opts& o) {
  o.finish();
  CommandOutput out;
  DilationBound d = erdos_dilation_bound(a);
  out.report = to_json(d);
  out.violation = d.value < 0 || !is_sum_free(d.witness);
  return out;
}

CommandOutput cmd_sift(const IntegerSet& a, Opts& o) {
  const double Q = o.need<double>("q");
  const i64 M = o.need<i64>("trunc");
  const double tol = o.get<double>("tol", 1e-9);
  o.finish();
  if (M < 1) throw UsageError("sift: trunc must be positive");
  SumFreeSpectrum series = build_FA(a, M, Q);
  SiftResult s = sift(series, Q);
  const double diff = max_coeff_diff(s.poly, series.cA + series.RQ);
  CommandOutput out;
  Json& j = out.report;
  j["Q"] = Q;
  j["M"] = M;
  j["F_terms"] = series.F.size();
  j["RQ_terms"] = series.RQ.size();
  j["RQ_l2"] = series.RQ.l2_norm();
  j["ks"] = s.ks;
  j["weights"] = s.weights;
  j["weight_l1"] = s.weight_l1;
  j["weight_product"] = s.weight_product;
  j["max_coeff_diff"] = diff;
  j["identity_ok"] = diff <= tol;
  out.violation = diff > tol;
  out.csv = poly_csv(s.poly);
  return out;
}

CommandOutput cmd_kernel(Opts& o) {
  const i64 T = o.need<i64>("t");
  const int over = o.get<int>("oversample", 8);
  o.finish();
  if (T < 1) throw UsageError("kernel: t must be positive");
  TrigPolynomial v = vp_kernel(T);
  std::size_t bad = 0;
  for (i64 n = -2 * T - 1; n <= 2 * T + 1; ++n)
    if (v.coeff(n) != cplx(vp_coefficient(T, n), 0.0)) ++bad;
  const double l1 = norm_lp(v, 1.0, grid_for(v, over));
  // identity on a fixed polynomial of degree T
  std::vector<Term> ft;
  for (i64 n = -T; n <= T; ++n) ft.emplace_back(n, cplx(1.0 / (1.0 + std::abs(static_cast<double>(n))), 0.5 / (1.0 + static_cast<double>(n * n))));
  TrigPolynomial f = TrigPolynomial::from_terms(ft);
  const double conv = max_coeff_diff(convolve(f, v), f);
  CommandOutput out;
  Json& j = out.report;
  j["T"] = T;
  j["terms"] = v.size();
  j["coefficient_mismatches"] = bad;
  j["grid_l1"] = l1;
  j["l1_ok"] = l1 <= 3.0;
  j["convolution_max_diff"] = conv;
  out.violation = bad > 0 || l1 > 3.0 || conv != 0.0;
  out.csv = poly_csv(v);
  return out;
}

CommandOutput cmd_dense(const IntegerSet& a, Opts& o) {
  const int ell = o.get<int>("ell", 4);
  const bool verify = o.get<bool>("verify", false);
  o.finish();
  if (ell < 2) throw UsageError("dense-model: ell must be at least 2");
  ModelCertificate c = dense_model(a, ell, verify ? 1 : -1);
  CommandOutput out;
  out.report = to_json(c);
  out.violation = !c.bound_ok || (c.verification_run && !c.verified);
  return out;
}

CommandOutput cmd_residue(const IntegerSet& a, Opts& o) {
  const double q1 = o.need<double>("q1");
  o.finish();
  ResidueTree t = decompose(a, q1);
  DimensionResult d = best_dimension(a);
  LargestClass lc = largest_class(t, d.dimension);
  std::size_t total = 0;
  bool consistent = true;
  for (const auto& [sig, members] : t.classes) {
    total += members.size();
    for (i64 x : members) consistent = consistent && signature_of(x, t.primes) == sig;
  }
  CommandOutput out;
  Json& j = out.report;
  j = to_json(t);
  j["dimension"] = d.dimension;
  j["dimension_exact"] = d.exact;
  j["largest"] = {{"signature", to_json(t, lc.signature)},
                  {"size", lc.size},
                  {"bound", lc.bound},
                  {"bound_ok", lc.bound_ok}};
  j["partition_ok"] = consistent && total == a.size();
  out.violation = !(consistent && total == a.size()) || (d.exact && !lc.bound_ok);
  return out;
}

CommandOutput cmd_chain(const IntegerSet& a, Opts& o) {
  const double q1 = o.need<double>("q1");
  const double g = o.get<double>("growth", 10.0);
  const i64 seed = o.get<i64>("seed_threshold", 1);
  o.finish();
  if (seed < 1) throw UsageError("chain: seed_threshold must be positive");
  ResidueTree t = decompose(a, q1);
  Chain c = find_chain(t, g, static_cast<std::size_t>(seed));
  ChainAudit au = audit_chain(t, c);
  CommandOutput out;
  out.report = to_json(t, c, au);
  out.violation = !au.ok();
  return out;
}

CommandOutput cmd_certify(const IntegerSet& a, Opts& o) {
  const std::string variant = o.need<std::string>("variant");
  const double tol = o.get<double>("tol", 1e-9);
  const bool phi = o.get<bool>("include_phi", false);
  CertifiedBound c;
  if (variant == "basic") {
    MpsConfig cfg;
    cfg.f = TrigPolynomial::indicator(a);
    cfg.blocks = o.has("blocks") ? parse_blocks(o.get<std::string>("blocks", "")) : std::vector<IntegerSet>{a};
    cfg.oversample = o.get<int>("oversample", 8);
    cfg.tol = tol;
    o.finish();
    c = mps_basic(cfg);
  } else if (variant == "analytic") {
    AnalyticOptions ao;
    ao.tol = std::max(tol, 1e-6);
    ao.ratio = o.get<i64>("ratio", ao.ratio);
    ao.oversample = o.get<int>("oversample", ao.oversample);
    const double K = o.get<double>("K", std::floor(std::sqrt(static_cast<double>(a.size()))));
    o.finish();
    c = mps_analytic(a, IntegerSet{}, TrigPolynomial{}, K, ao);
  } else if (variant == "modular") {
    auto chain = parse_chain(o.need<std::string>("chain"));
    const int over = o.get<int>("oversample", 8);
    o.finish();
    c = mps_modular(a, chain, TrigPolynomial{}, over, tol);
  } else if (variant == "dimension") {
    const int over = o.get<int>("oversample", 8);
    o.finish();
    c = dimension_certificate(TrigPolynomial::indicator(a), additive_dimension(a, a.size() <= 20 ? DimensionMode::Exact : DimensionMode::Greedy).witness,
                              static_cast<double>(a.size()), over, tol);
  } else {
    throw UsageError("certify-l1: unknown variant '" + variant + "'");
  }
  CommandOutput out;
  out.report = to_json(c, phi);
  out.violation = !c.audit_ok();
  return out;
}

CommandOutput cmd_energy(const IntegerSet& a, Opts& o) {
  auto X = o.has("blocks") ? parse_blocks(o.get<std::string>("blocks", "")) : std::vector<IntegerSet>{a};
  const double N = o.get<double>("n", 0.0);
  o.finish();
  CommandOutput out;
  out.report = to_json(energy_inverse_check(TrigPolynomial::indicator(a), X, N));
  return out;
}

}  // namespace

CommandOutput run_command(const std::string& name, const IntegerSet* set, const Json& options) {
  Opts o(options, name);
  if (name == "kernel") return cmd_kernel(o);
  const IntegerSet* s = set;
  if (name == "exact") return cmd_exact(need_set(s, name), o);
  if (name == "dilation-bound") return cmd_dilation(need_set(s, name), o);
  if (name == "sift") return cmd_sift(need_set(s, name), o);
  if (name == "dense-model") return cmd_dense(need_set(s, name), o);
  if (name == "residue-tree") return cmd_residue(need_set(s, name), o);
  if (name == "chain") return cmd_chain(need_set(s, name), o);
  if (name == "certify-l1") return cmd_certify(need_set(s, name), o);
  if (name == "energy-check") return cmd_energy(need_set(s, name), o);
  throw UsageError("unknown command '" + name + "'");
}

ExperimentConfig config_from_json(const Json& options) {
  Opts o(options, "suite");
  ExperimentConfig c;
  c.seed = o.get<std::uint64_t>("seed", c.seed);
  c.q1 = o.get<double>("q1", c.q1);
  c.q = o.get<double>("q", c.q);
  c.trunc = o.get<i64>("trunc", c.trunc);
  c.grid_oversample = o.get<int>("grid_oversample", c.grid_oversample);
  c.tol = o.get<double>("tol", c.tol);
  c.time_limit_ms = o.get<i64>("time_limit_ms", c.time_limit_ms);
  c.output_dir = o.get<std::string>("output_dir", c.output_dir);
  c.instances = o.get<std::size_t>("instances", c.instances);
  o.finish();
  if (c.q1 <= 0 || c.q <= 0 || c.trunc <= 0 || c.grid_oversample <= 0 || c.tol <= 0 || c.time_limit_ms <= 0)
    throw UsageError("suite: configuration values must be positive");
  return c;
}

}  // namespace sf
