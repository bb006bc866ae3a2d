// sumfree command line: a thin wrapper over the C interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "sumfree/sumfree.h"

namespace {

using nlohmann::json;

int exit_code(sumfree_status s) {
  switch (s) {
    case SUMFREE_OK: return 0;
    case SUMFREE_VIOLATION: return 1;
    case SUMFREE_USAGE: return 2;
    default: return 3;
  }
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << text;
  return true;
}

struct Common {
  std::string set_path;
  std::string out_path;
  std::string csv_path;
  int indent = 2;
};

// Emits the report and returns the process exit code.
int finish(sumfree_status st, sumfree_report* rep, const Common& c) {
  if (!rep) {
    std::cerr << "error: " << sumfree_last_error() << "\n";
    return exit_code(st);
  }
  std::string text = std::string(sumfree_report_json(rep, c.indent)) + "\n";
  bool ok = true;
  if (c.out_path.empty()) std::cout << text;
  else ok = write_file(c.out_path, text);
  if (!c.csv_path.empty()) {
    std::string csv = sumfree_report_csv(rep);
    if (csv.empty()) std::cerr << "warning: this command has no CSV output\n";
    else ok = write_file(c.csv_path, csv) && ok;
  }
  if (double ms = sumfree_report_wall_ms(rep); ms > 0) std::cerr << "wall time " << ms << " ms\n";
  sumfree_report_free(rep);
  if (!ok) return 3;
  return exit_code(st);
}

int run(const std::string& cmd, const Common& c, const json& opts, bool needs_set) {
  sumfree_set* set = nullptr;
  if (needs_set) {
    sumfree_status st = sumfree_set_load(c.set_path.c_str(), &set);
    if (st != SUMFREE_OK) {
      std::cerr << "error: " << sumfree_last_error() << "\n";
      return exit_code(st);
    }
  }
  sumfree_report* rep = nullptr;
  const std::string o = opts.dump();
  sumfree_status st = sumfree_run(cmd.c_str(), set, o.c_str(), &rep);
  sumfree_set_free(set);
  return finish(st, rep, c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sum-free sets, Fourier certificates and residue structure"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sumfree_version()));

  Common common;
  json opts = json::object();
  std::map<std::string, CLI::App*> subs;

  auto add_common = [&](CLI::App* s, bool set, bool csv) {
    if (set) s->add_option("--set", common.set_path, "JSON set file {\"elements\": [...]}")->required();
    s->add_option("--out", common.out_path, "write the JSON report here instead of stdout");
    s->add_option("--indent", common.indent, "JSON indentation, -1 for compact");
    if (csv) s->add_option("--csv", common.csv_path, "write CSV rows here");
  };

  std::optional<long long> time_limit;
  bool distinct = false;
  auto* exact = app.add_subcommand("exact", "maximum sum-free subset");
  add_common(exact, true, false);
  exact->add_option("--time-limit-ms", time_limit);
  exact->add_flag("--distinct", distinct, "only x + y = z with x != y are forbidden");
  subs["exact"] = exact;

  auto* dil = app.add_subcommand("dilation-bound", "Erdos dilation lower bound");
  add_common(dil, true, false);
  subs["dilation-bound"] = dil;

  double q = 0, tol = 1e-9;
  long long trunc = 0;
  auto* sift = app.add_subcommand("sift", "sifting identity for F_A");
  add_common(sift, true, true);
  sift->add_option("--q", q)->required();
  sift->add_option("--trunc", trunc)->required();
  sift->add_option("--tol", tol);
  subs["sift"] = sift;

  long long t = 0;
  auto* kern = app.add_subcommand("kernel", "de la Vallee-Poussin kernel checks");
  add_common(kern, false, true);
  kern->add_option("--t", t)->required();
  subs["kernel"] = kern;

  int ell = 4;
  bool verify = false;
  auto* dense = app.add_subcommand("dense-model", "dense F_ell-isomorphic model");
  add_common(dense, true, false);
  dense->add_option("--ell", ell);
  dense->add_flag("--verify", verify, "force the exhaustive F_ell and S(A) check");
  subs["dense-model"] = dense;

  double q1 = 0;
  auto* tree = app.add_subcommand("residue-tree", "residue class decomposition");
  add_common(tree, true, false);
  tree->add_option("--q1", q1)->required();
  subs["residue-tree"] = tree;

  double growth = 10;
  long long seed_threshold = 1;
  auto* chain = app.add_subcommand("chain", "growing chain of residue classes");
  add_common(chain, true, false);
  chain->add_option("--q1", q1)->required();
  chain->add_option("--growth", growth);
  chain->add_option("--seed-threshold", seed_threshold);
  subs["chain"] = chain;

  std::string variant, blocks, chain_spec;
  std::optional<double> K;
  std::optional<long long> ratio;
  std::optional<int> oversample;
  bool include_phi = false;
  auto* cert = app.add_subcommand("certify-l1", "certified L1 lower bound by a dual test function");
  add_common(cert, true, false);
  cert->add_option("--variant", variant)->required()->check(CLI::IsMember({"basic", "analytic", "modular", "dimension"}));
  cert->add_option("--blocks", blocks, "blocks, e.g. 1-4;5-20");
  cert->add_option("--chain", chain_spec, "residues r:q, e.g. 1:2;2:4 or 1:2,2:4");
  cert->add_option("--tol", tol);
  cert->add_option("--K", K);
  cert->add_option("--ratio", ratio);
  cert->add_option("--oversample", oversample);
  cert->add_flag("--include-phi", include_phi);
  subs["certify-l1"] = cert;

  std::optional<double> n_param;
  auto* energy = app.add_subcommand("energy-check", "additive energy checks for f = 1_A");
  add_common(energy, true, false);
  energy->add_option("--blocks", blocks, "sets X_i, default X_1 = A");
  energy->add_option("--n", n_param);
  subs["energy-check"] = energy;

  std::string suite_name;
  json cfg = json::object();
  std::optional<unsigned long long> seed;
  std::optional<double> s_q1, s_q, s_tol;
  std::optional<long long> s_trunc, s_tl;
  std::optional<int> s_over;
  std::optional<std::size_t> instances;
  std::string output_dir;
  auto* suite = app.add_subcommand("suite", "run an experiment suite");
  suite->add_option("name", suite_name, "bourgain-check, littlewood-curve, dimension-vs-l1, dense-model-run, chain-demo, dichotomy-probe")->required();
  suite->add_option("--seed", seed);
  suite->add_option("--q1", s_q1);
  suite->add_option("--q", s_q);
  suite->add_option("--trunc", s_trunc);
  suite->add_option("--oversample", s_over);
  suite->add_option("--tol", s_tol);
  suite->add_option("--time-limit-ms", s_tl);
  suite->add_option("--instances", instances);
  suite->add_option("--output-dir", output_dir);
  suite->add_option("--out", common.out_path);
  suite->add_option("--csv", common.csv_path);
  suite->add_option("--indent", common.indent);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (suite->parsed()) {
    if (seed) cfg["seed"] = *seed;
    if (s_q1) cfg["q1"] = *s_q1;
    if (s_q) cfg["q"] = *s_q;
    if (s_trunc) cfg["trunc"] = *s_trunc;
    if (s_over) cfg["grid_oversample"] = *s_over;
    if (s_tol) cfg["tol"] = *s_tol;
    if (s_tl) cfg["time_limit_ms"] = *s_tl;
    if (instances) cfg["instances"] = *instances;
    if (!output_dir.empty()) cfg["output_dir"] = output_dir;
    sumfree_report* rep = nullptr;
    const std::string c = cfg.dump();
    sumfree_status st = sumfree_run_suite(suite_name.c_str(), c.c_str(), &rep);
    return finish(st, rep, common);
  }

  if (exact->parsed()) {
    if (time_limit) opts["time_limit_ms"] = *time_limit;
    if (distinct) opts["distinct"] = true;
    return run("exact", common, opts, true);
  }
  if (dil->parsed()) return run("dilation-bound", common, opts, true);
  if (sift->parsed()) {
    opts["q"] = q;
    opts["trunc"] = trunc;
    opts["tol"] = tol;
    return run("sift", common, opts, true);
  }
  if (kern->parsed()) {
    opts["t"] = t;
    return run("kernel", common, opts, false);
  }
  if (dense->parsed()) {
    opts["ell"] = ell;
    if (verify) opts["verify"] = true;
    return run("dense-model", common, opts, true);
  }
  if (tree->parsed()) {
    opts["q1"] = q1;
    return run("residue-tree", common, opts, true);
  }
  if (chain->parsed()) {
    opts["q1"] = q1;
    opts["growth"] = growth;
    opts["seed_threshold"] = seed_threshold;
    return run("chain", common, opts, true);
  }
  if (cert->parsed()) {
    opts["variant"] = variant;
    opts["tol"] = tol;
    if (!blocks.empty()) opts["blocks"] = blocks;
    if (!chain_spec.empty()) opts["chain"] = chain_spec;
    if (K) opts["K"] = *K;
    if (ratio) opts["ratio"] = *ratio;
    if (oversample) opts["oversample"] = *oversample;
    if (include_phi) opts["include_phi"] = true;
    return run("certify-l1", common, opts, true);
  }
  if (energy->parsed()) {
    if (!blocks.empty()) opts["blocks"] = blocks;
    if (n_param) opts["n"] = *n_param;
    return run("energy-check", common, opts, true);
  }
  return 2;
}
