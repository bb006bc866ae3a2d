#include "cli/report.hpp"

namespace sf {

Json to_json(const IntegerSet& s) {
  Json j;
  j["name"] = s.name;
  j["elements"] = s.elements;
  return j;
}

Json to_json(const SumFreeResult& r) {
  Json j;
  j["size"] = r.size;
  j["witness"] = r.witness.elements;
  j["nodes"] = r.nodes_explored;
  j["timed_out"] = r.timed_out;
  return j;
}

Json to_json(const DilationBound& d) {
  Json j;
  j["x_star"] = d.x_star;
  j["x_num"] = d.x_num;
  j["x_den"] = d.x_den;
  j["value"] = d.value;
  j["count"] = d.count;
  j["lower_bound"] = d.lower_bound;
  j["witness"] = d.witness.elements;
  j["exact"] = d.exact;
  j["cells"] = d.cells;
  return j;
}

Json to_json(const ModelCertificate& c) {
  Json j;
  j["ell"] = c.ell;
  j["original"] = c.original;
  j["model"] = c.model;
  Json steps = Json::array();
  for (const auto& s : c.chain) {
    Json x;
    x["p"] = s.p;
    x["lambda"] = s.lambda;
    x["k"] = s.k;
    x["radius_before"] = s.radius_before;
    x["radius_after"] = s.radius_after;
    x["pigeonhole_bound"] = s.pigeonhole_bound;
    x["compression_condition"] = s.compression_condition;
    x["exhaustive"] = s.exhaustive;
    steps.push_back(x);
  }
  j["chain"] = steps;
  j["dims"] = c.dims;
  j["k_max"] = c.k_max;
  j["final_radius"] = c.final_radius;
  j["radius_bound"] = c.radius_bound;
  j["bound_ok"] = c.bound_ok;
  j["verification_run"] = c.verification_run;
  if (c.verification_run) {
    j["iso_ok"] = c.iso_ok;
    j["s_original"] = c.s_original;
    j["s_model"] = c.s_model;
  }
  j["verified"] = c.verified;
  j["cap_hit"] = c.cap_hit;
  return j;
}

Json to_json(const ResidueTree& t, const ResidueSignature& s) {
  Json j;
  j["r"] = s.r;
  Json nu = Json::array();
  for (std::size_t i = 0; i < s.nu.size(); ++i) nu.push_back({t.primes[i], s.nu[i]});
  j["nu"] = nu;
  return j;
}

Json to_json(const ResidueTree& t) {
  Json j;
  j["q1"] = t.q1;
  j["primes"] = t.primes;
  j["N"] = t.N;
  Json cls = Json::array();
  for (const auto& [sig, members] : t.classes) {
    Json c;
    c["signature"] = to_json(t, sig);
    c["canonical_r"] = t.canonical(sig.r);
    c["size"] = members.size();
    c["elements"] = members;
    cls.push_back(c);
  }
  j["classes"] = cls;
  return j;
}

Json to_json(const ResidueTree& t, const Chain& c, const ChainAudit& a) {
  Json j;
  j["growth"] = c.growth;
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json x;
    x["signature"] = to_json(t, s.signature);
    x["size"] = s.members.size();
    x["members"] = s.members;
    steps.push_back(x);
  }
  j["length"] = c.steps.size();
  j["steps"] = steps;
  Json au;
  au["strict_order"] = a.strict_order;
  au["growth"] = a.growth;
  au["maximal"] = a.maximal;
  au["members_match"] = a.members_match;
  au["ok"] = a.ok();
  au["detail"] = a.detail;
  j["audit"] = au;
  return j;
}

Json to_json(const ResidueTree& t, const DichotomyReport& d) {
  Json j;
  j["top"] = to_json(t, d.top);
  j["top_size"] = d.top_size;
  j["scale"] = d.scale;
  Json preds = Json::array();
  for (const auto& p : d.predecessors) {
    Json x;
    x["nu"] = p.nu;
    x["max_class"] = p.max_class;
    x["clears"] = p.clears;
    x["minimal_clearing"] = p.minimal_clearing;
    preds.push_back(x);
  }
  j["predecessors"] = preds;
  j["predecessor_clears"] = d.predecessor_clears;
  Json contr = Json::array();
  for (const auto& m : d.contributions) {
    Json x;
    x["mu"] = m.mu;
    x["k"] = m.k;
    x["max_class"] = m.max_class;
    x["e_norm"] = m.e_norm;
    x["bound"] = m.bound;
    x["ratio"] = m.ratio;
    contr.push_back(x);
  }
  j["contributions"] = contr;
  j["decomposition_max_diff"] = d.decomposition_max_diff;
  j["projection_terms"] = d.projection_terms;
  j["medium_primes"] = {{"above", d.medium_primes_range.at(0)}, {"upto", d.medium_primes_range.at(1)}};
  return j;
}

Json to_json(const CertifiedBound& c, bool include_phi) {
  Json j;
  j["variant"] = c.variant;
  j["grid_size"] = c.grid_size;
  j["J"] = c.J;
  j["sup_norm"] = c.sup_norm;
  j["inner_product"] = c.inner_product;
  j["lower_bound"] = c.lower_bound;
  j["grid_l1"] = c.grid_l1;
  j["downgraded"] = c.downgraded;
  j["audit_ok"] = c.audit_ok();
  Json au = Json::array();
  for (const auto& a : c.audit) au.push_back({{"name", a.name}, {"value", a.value}, {"limit", a.limit}, {"pass", a.pass}});
  j["audit"] = au;
  Json led;
  for (const auto& [k, v] : c.ledger) led[k] = v;
  j["ledger"] = led;
  if (include_phi) {
    Json phi = Json::array();
    for (const auto& v : c.phi) phi.push_back({v.real(), v.imag()});
    j["phi"] = phi;
  }
  return j;
}

Json to_json(const EnergyReport& r) {
  Json j;
  j["f_l1"] = r.f_l1;
  j["f_l2"] = r.f_l2;
  j["N"] = r.N;
  j["c_l2"] = r.c_l2;
  j["K"] = r.K;
  j["K_required"] = r.K_required;
  j["min_abs_f"] = r.min_abs_f;
  j["min_ok"] = r.min_ok;
  Json pairs = Json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"j", p.j}, {"j_prime", p.jp}, {"energy", p.energy}, {"ratio", p.ratio}});
  j["pairs"] = pairs;
  j["max_ratio"] = r.max_ratio;
  j["self_energy"] = r.self_energy;
  j["energy_ratio"] = r.energy_ratio;
  return j;
}

}  // namespace sf
