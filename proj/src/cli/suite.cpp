#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>

#include "cli/commands.hpp"
#include "cli/io.hpp"
#include "core/errors.hpp"
#include "core/grid.hpp"
#include "core/parallel.hpp"
#include "exact/dissociated.hpp"
#include "exact/energy.hpp"

namespace sf {

namespace {

constexpr int kCsvVersion = 1;

struct Row {
  Json json;
  std::string csv;
  bool ok = true;
  bool budget = false;
};

std::mt19937_64 instance_rng(std::uint64_t seed, std::size_t i) {
  std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                  static_cast<std::uint32_t>(i)};
  return std::mt19937_64(s);
}

std::vector<i64> sample(std::mt19937_64& rng, i64 lo, i64 hi, std::size_t n) {
  std::vector<i64> pool;
  for (i64 x = lo; x <= hi; ++x) pool.push_back(x);
  for (std::size_t i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> d(i, pool.size() - 1);
    std::swap(pool[i], pool[d(rng)]);
  }
  pool.resize(n);
  std::sort(pool.begin(), pool.end());
  return pool;
}

i64 uniform(std::mt19937_64& rng, i64 lo, i64 hi) {
  return std::uniform_int_distribution<i64>(lo, hi)(rng);
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class... T>
std::string csv_line(const T&... xs) {
  std::string s;
  auto add = [&](const auto& x) {
    if (!s.empty()) s += ',';
    using X = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<X, std::string>) s += x;
    else if constexpr (std::is_same_v<X, bool>) s += x ? "1" : "0";
    else if constexpr (std::is_floating_point_v<X>) s += fmt(x);
    else s += std::to_string(x);
  };
  (add(xs), ...);
  return s + "\n";
}

double grid_l1_of(const IntegerSet& b, int over) {
  const std::size_t L = next_pow2(static_cast<std::size_t>(over) * static_cast<std::size_t>(b.max_abs() + 1));
  return grid_norm(evaluate_folded(TrigPolynomial::indicator(b), L), 1.0);
}

// Runs fn for every index in parallel; budget failures flag the row.
std::vector<Row> run_rows(std::size_t n, const std::function<Row(std::size_t)>& fn) {
  std::vector<Row> rows(n);
  parallel_for(n, [&](std::size_t i) {
    try {
      rows[i] = fn(i);
    } catch (const BudgetError& e) {
      rows[i].budget = true;
      rows[i].json = {{"index", i}, {"budget_exceeded", true}, {"error", e.what()}};
      rows[i].csv = "";
    }
  });
  return rows;
}

Row bourgain_row(const ExperimentConfig& cfg, std::size_t i) {
  auto rng = instance_rng(cfg.seed, i);
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 5, 14));
  IntegerSet a = make_set(sample(rng, 1, 50, n));
  SumFreeOptions so;
  so.time_limit_ms = cfg.time_limit_ms;
  SumFreeResult s = max_sum_free(a, so);
  if (s.timed_out) throw BudgetError("exact solver timed out");
  DilationBound d = erdos_dilation_bound(a);
  const std::size_t floor_n = (n + 2 + 2) / 3;  // ceil((N+2)/3)
  Row r;
  r.ok = s.size >= floor_n && d.count <= s.size && is_sum_free(d.witness) && d.value >= 0;
  r.json = {{"index", i}, {"A", a.elements}, {"N", n}, {"S", s.size}, {"floor", floor_n},
            {"dilation_count", d.count}, {"dilation_value", d.value}, {"ok", r.ok}};
  r.csv = csv_line(i, n, s.size, floor_n, d.count, r.ok);
  return r;
}

Row littlewood_row(const ExperimentConfig& cfg, std::size_t i) {
  static const i64 sizes[] = {16, 64, 256, 1024};
  const i64 N = sizes[i];
  std::vector<i64> v;
  for (i64 x = 1; x <= N; ++x) v.push_back(x);
  IntegerSet b = make_set(v);
  const double l1 = grid_l1_of(b, cfg.grid_oversample);
  const double ratio = l1 / std::log(static_cast<double>(N));
  AnalyticOptions ao;
  ao.ratio = 2;
  CertifiedBound c = mps_analytic(b, IntegerSet{}, TrigPolynomial{}, std::floor(std::sqrt(static_cast<double>(N))), ao);
  Row r;
  const bool band = ratio >= 0.30 && ratio <= 0.60;
  const bool below = c.lower_bound <= l1 + cfg.tol;
  r.ok = band && below && c.audit_ok();
  r.json = {{"N", N}, {"grid_l1", l1}, {"l1_over_log", ratio}, {"in_band", band},
            {"certificate", c.lower_bound}, {"J", c.J}, {"certificate_below_norm", below},
            {"audit_ok", c.audit_ok()}, {"ok", r.ok}};
  r.csv = csv_line(N, l1, ratio, c.lower_bound, c.J, band, below);
  return r;
}

Row dimension_row(const ExperimentConfig& cfg, std::size_t i) {
  const int k = 4 + static_cast<int>(i);
  std::vector<i64> v;
  for (int e = 0; e <= k; ++e) v.push_back(i64{1} << e);
  IntegerSet b = make_set(v);
  DimensionResult d = best_dimension(b);
  const double l1 = grid_l1_of(b, cfg.grid_oversample);
  CertifiedBound c = dimension_certificate(TrigPolynomial::indicator(b), b, static_cast<double>(b.size()),
                                           cfg.grid_oversample, cfg.tol);
  Row r;
  const bool below = c.lower_bound <= l1 + cfg.tol;
  r.ok = below && c.audit_ok();
  r.json = {{"k", k}, {"size", b.size()}, {"dim", d.dimension}, {"dim_exact", d.exact},
            {"grid_l1", l1}, {"certificate", c.lower_bound}, {"J", c.J},
            {"dim_side", c.ledger_value("dim_side")}, {"certificate_below_norm", below}, {"ok", r.ok}};
  r.csv = csv_line(k, b.size(), d.dimension, l1, c.lower_bound, c.J, below);
  return r;
}

Row dense_row(const ExperimentConfig& cfg, std::size_t i) {
  auto rng = instance_rng(cfg.seed, i);
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 10));
  const i64 d = uniform(rng, 1000, 1000000);
  IntegerSet a0 = make_set(sample(rng, 1, 12, n));
  IntegerSet a = dilate(a0, d);
  ModelCertificate c = dense_model(a, 4, 1);
  Row r;
  r.ok = c.bound_ok && c.verified;
  r.json = {{"index", i}, {"A0", a0.elements}, {"d", d}, {"k_max", c.k_max}, {"steps", c.chain.size()},
            {"model", c.model}, {"final_radius", c.final_radius}, {"radius_bound", c.radius_bound},
            {"iso_ok", c.iso_ok}, {"s_original", c.s_original}, {"s_model", c.s_model}, {"ok", r.ok}};
  r.csv = csv_line(i, n, d, c.k_max, c.final_radius, c.radius_bound, c.iso_ok, c.s_original, c.s_model, r.ok);
  return r;
}

Row chain_row(const ExperimentConfig& cfg, std::size_t i) {
  auto rng = instance_rng(cfg.seed, i);
  static const double q1s[] = {2, 3, 5, 7, 11, 13};
  const double q1 = q1s[uniform(rng, 0, 5)];
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 5, 30));
  std::vector<i64> v;
  while (v.size() < n) {
    i64 x = uniform(rng, 1, 60) * (i64{1} << uniform(rng, 0, 6));
    for (int e = static_cast<int>(uniform(rng, 0, 3)); e > 0; --e) x *= 3;
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }
  IntegerSet a = make_set(v);
  ResidueTree t = decompose(a, q1);
  std::size_t total = 0;
  bool consistent = true;
  for (const auto& [sig, members] : t.classes) {
    total += members.size();
    for (i64 x : members) consistent = consistent && signature_of(x, t.primes) == sig;
  }
  DimensionResult d = best_dimension(a);
  LargestClass lc = largest_class(t, d.dimension);
  Chain c = find_chain(t, 10.0, 1);
  ChainAudit au = audit_chain(t, c);
  Row r;
  const bool partition = consistent && total == n;
  r.ok = partition && (!d.exact || lc.bound_ok) && au.ok();
  r.json = {{"index", i}, {"q1", q1}, {"N", n}, {"classes", t.classes.size()}, {"partition_ok", partition},
            {"dim", d.dimension}, {"dim_exact", d.exact}, {"largest", lc.size}, {"bound", lc.bound},
            {"bound_ok", lc.bound_ok}, {"chain_length", c.steps.size()}, {"chain_audit", au.ok()}, {"ok", r.ok}};
  r.csv = csv_line(i, q1, n, t.classes.size(), partition, d.dimension, lc.size, lc.bound, lc.bound_ok,
                   c.steps.size(), au.ok());
  return r;
}

Row dichotomy_row(const ExperimentConfig& cfg, std::size_t i) {
  auto rng = instance_rng(cfg.seed, i);
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 5, 20));
  std::vector<i64> v;
  while (v.size() < n) {
    i64 x = uniform(rng, 1, 50) * (i64{1} << uniform(rng, 0, 3));
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }
  IntegerSet a = make_set(v);
  ResidueTree t = decompose(a, cfg.q1);
  DichotomyReport d = dichotomy_probe(a, cfg.q1, cfg.q, a.max_abs(), cfg.trunc);
  double worst = 0;
  for (const auto& m : d.contributions) worst = std::max(worst, m.ratio);
  Row r;
  r.ok = d.decomposition_max_diff <= cfg.tol;
  r.json = {{"index", i}, {"A", a.elements}, {"top", to_json(t, d.top)}, {"top_size", d.top_size},
            {"predecessor_clears", d.predecessor_clears}, {"decomposition_max_diff", d.decomposition_max_diff},
            {"projection_terms", d.projection_terms}, {"max_error_ratio", worst}, {"ok", r.ok}};
  r.csv = csv_line(i, n, d.top_size, d.predecessor_clears, d.decomposition_max_diff, d.projection_terms, worst, r.ok);
  return r;
}

struct SuiteDef {
  const char* name;
  std::size_t default_instances;
  bool fixed;  // instance count not configurable
  const char* header;
  Row (*row)(const ExperimentConfig&, std::size_t);
};

const SuiteDef kSuites[] = {
    {"bourgain-check", 500, false, "index,N,S,floor,dilation_count,ok", bourgain_row},
    {"littlewood-curve", 4, true, "N,grid_l1,l1_over_log,certificate,J,in_band,certificate_below_norm", littlewood_row},
    {"dimension-vs-l1", 11, true, "k,size,dim,grid_l1,certificate,J,certificate_below_norm", dimension_row},
    {"dense-model-run", 50, false, "index,size,d,k_max,final_radius,radius_bound,iso_ok,s_original,s_model,ok", dense_row},
    {"chain-demo", 200, false, "index,q1,N,classes,partition_ok,dim,largest,bound,bound_ok,chain_length,chain_audit", chain_row},
    {"dichotomy-probe", 20, false, "index,N,top_size,predecessor_clears,decomposition_max_diff,projection_terms,max_error_ratio,ok", dichotomy_row},
};

}  // namespace

ExperimentReport run_suite(const std::string& name, const ExperimentConfig& cfg) {
  const SuiteDef* def = nullptr;
  for (const auto& s : kSuites)
    if (name == s.name) def = &s;
  if (!def) throw UsageError("unknown suite '" + name + "'");
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = def->fixed || cfg.instances == 0 ? def->default_instances : cfg.instances;
  auto rows = run_rows(n, [&](std::size_t i) { return def->row(cfg, i); });

  ExperimentReport rep;
  std::size_t passed = 0, flagged = 0;
  Json jr = Json::array();
  rep.csv = "# sumfree-suite " + name + " v" + std::to_string(kCsvVersion) + " seed=" + std::to_string(cfg.seed) + "\n";
  rep.csv += std::string(def->header) + "\n";
  for (const auto& r : rows) {
    jr.push_back(r.json);
    rep.csv += r.csv;
    if (r.budget) ++flagged;
    else if (r.ok) ++passed;
  }
  bool monotone = true;
  if (name == "dimension-vs-l1")
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (!rows[i].budget && !rows[i - 1].budget &&
          rows[i].json["certificate"].get<double>() < rows[i - 1].json["certificate"].get<double>() - cfg.tol)
        monotone = false;
  Json& j = rep.json;
  j["suite"] = name;
  j["config"] = {{"seed", cfg.seed}, {"q1", cfg.q1}, {"q", cfg.q}, {"trunc", cfg.trunc},
                 {"grid_oversample", cfg.grid_oversample}, {"tol", cfg.tol},
                 {"time_limit_ms", cfg.time_limit_ms}, {"instances", n}};
  j["rows"] = jr;
  Json summary = {{"instances", n}, {"passed", passed}, {"failed", n - passed - flagged}, {"budget_exceeded", flagged}};
  if (name == "dimension-vs-l1") summary["monotone"] = monotone;
  j["summary"] = summary;
  rep.violation = passed + flagged != n || !monotone;
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (!cfg.output_dir.empty()) {
    std::filesystem::create_directories(cfg.output_dir);
    write_text(cfg.output_dir + "/" + name + ".json", j.dump(2) + "\n");
    write_text(cfg.output_dir + "/" + name + ".csv", rep.csv);
  }
  return rep;
}

}  // namespace sf
