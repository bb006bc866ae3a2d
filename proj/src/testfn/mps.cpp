#include "testfn/mps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "core/errors.hpp"
#include "core/number_theory.hpp"
#include "exact/dissociated.hpp"
#include "exact/energy.hpp"
#include "fourier/kernels.hpp"

namespace sf {

bool CertifiedBound::audit_ok() const {
  return std::all_of(audit.begin(), audit.end(), [](const AuditItem& a) { return a.pass; });
}

double CertifiedBound::ledger_value(const std::string& key) const {
  for (const auto& [k, v] : ledger)
    if (k == key) return v;
  return std::numeric_limits<double>::quiet_NaN();
}

namespace {

void check(CertifiedBound& c, std::string name, double value, double limit) {
  c.audit.push_back({std::move(name), value, limit, value <= limit});
}

i64 max_abs_freq(const TrigPolynomial& p) {
  i64 m = 0;
  for (const auto& t : p.terms()) m = std::max(m, std::abs(t.first));
  return m;
}

GridValues mul(const GridValues& a, const GridValues& b) {
  GridValues r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

GridValues q_of(const GridValues& g) {
  GridValues q(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) q[i] = std::exp(-std::abs(g[i]));
  return q;
}

// max over the grid of |1 - Q| - |bound|
double one_minus_q_excess(const GridValues& q, const GridValues& bound) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < q.size(); ++i)
    m = std::max(m, std::abs(1.0 - q[i]) - std::abs(bound[i]));
  return m;
}

// Phi_1 = g_1, Phi_{j+1} = g_{j+1} + Q_{j+1} Phi_j
GridValues recursion(const std::vector<GridValues>& g, const std::vector<GridValues>& q) {
  GridValues phi = g[0];
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = g[j][i] + q[j][i] * phi[i];
  return phi;
}

void finish(CertifiedBound& c, const GridValues& target, double tol) {
  c.sup_norm = grid_norm(c.phi, std::numeric_limits<double>::infinity());
  c.inner_product = grid_inner(target, c.phi).real();
  c.grid_l1 = grid_norm(target, 1.0);
  c.lower_bound = c.sup_norm > 0 ? c.inner_product / c.sup_norm : 0.0;
  check(c, "sup_phi", c.sup_norm, 10.0 + tol);
  check(c, "duality", c.inner_product - c.sup_norm * c.grid_l1, tol * std::max(1.0, c.grid_l1));
}

std::size_t pow2_grid(i64 degree, int oversample) {
  if (oversample < 1) throw PreconditionError("oversample must be positive");
  return next_pow2(static_cast<std::size_t>(oversample) * static_cast<std::size_t>(degree + 1));
}

}  // namespace

CertifiedBound mps_basic(const MpsConfig& cfg) {
  if (cfg.blocks.empty()) throw PreconditionError("mps_basic: no blocks");
  CertifiedBound c;
  c.variant = "basic";
  c.J = cfg.blocks.size();
  i64 deg = max_abs_freq(cfg.f);
  for (const auto& b : cfg.blocks) deg = std::max(deg, b.max_abs());
  const std::size_t L = pow2_grid(deg, cfg.oversample);
  c.grid_size = L;

  std::vector<GridValues> g, q;
  for (std::size_t i = 0; i < cfg.blocks.size(); ++i) {
    const IntegerSet& X = cfg.blocks[i];
    const double inv = X.empty() ? 0.0 : 1.0 / static_cast<double>(X.size());
    std::vector<Term> terms;
    cplx inner = 0;
    double expected = 0;
    for (i64 n : X.elements) {
      cplx fn = cfg.f.coeff(n);
      if (std::abs(fn) == 0) continue;
      cplx gn = fn / std::abs(fn) * inv;
      terms.emplace_back(n, gn);
      inner += fn * std::conj(gn);
      expected += std::abs(fn) * inv;
    }
    if (terms.empty())
      throw PreconditionError("mps_basic: block " + std::to_string(i + 1) +
                              " does not meet the support of f");
    TrigPolynomial gi = TrigPolynomial::from_terms(std::move(terms));
    g.push_back(evaluate_folded(gi, L));
    q.push_back(q_of(g.back()));
    const std::string tag = "block" + std::to_string(i + 1) + ".";
    check(c, tag + "sup_g", grid_norm(g.back(), std::numeric_limits<double>::infinity()), 1.0 + cfg.tol);
    check(c, tag + "l2_g", gi.l2_norm(), std::sqrt(inv) + cfg.tol);
    check(c, tag + "inner_fg", std::abs(inner - expected), 1e-12 * std::max(1.0, expected));
    check(c, tag + "one_minus_q", one_minus_q_excess(q.back(), g.back()), cfg.tol);
    c.ledger.emplace_back(tag + "inner_fg", inner.real());
  }
  c.phi = recursion(g, q);
  finish(c, evaluate_folded(cfg.f, L), cfg.tol);
  return c;
}

CertifiedBound dimension_certificate(const TrigPolynomial& f, const IntegerSet& D, double N_inf,
                                     int oversample, double tol) {
  if (D.empty()) throw PreconditionError("dimension_certificate: empty D");
  if (!is_dissociated(D)) throw PreconditionError("dimension_certificate: D is not dissociated");
  CertifiedBound c;
  c.variant = "dimension";
  const double logN = std::log(std::max(N_inf, std::exp(1.0)));
  c.J = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(D.size()) / logN))));
  const i64 deg = std::max(max_abs_freq(f), D.max_abs());
  const std::size_t L = pow2_grid(deg, oversample);
  c.grid_size = L;

  const double inv = 1.0 / static_cast<double>(D.size());
  std::vector<Term> terms;
  double min_abs = std::numeric_limits<double>::infinity();
  cplx inner_fg = 0;
  for (i64 d : D.elements) {
    cplx fd = f.coeff(d);
    min_abs = std::min(min_abs, std::abs(fd));
    if (std::abs(fd) == 0) continue;
    cplx gd = fd / std::abs(fd) * inv;
    terms.emplace_back(d, gd);
    inner_fg += fd * std::conj(gd);
  }
  if (terms.empty()) throw PreconditionError("dimension_certificate: f vanishes on D");
  TrigPolynomial gp = TrigPolynomial::from_terms(std::move(terms));
  const GridValues g = evaluate_folded(gp, L);
  const GridValues q = q_of(g);
  check(c, "sup_g", grid_norm(g, std::numeric_limits<double>::infinity()), 1.0 + tol);
  check(c, "one_minus_q", one_minus_q_excess(q, g), tol);

  // Phi_J = g (1 + Q + ... + Q^{J-1}); telescoped: J g - g sum_{j<J} (1 - Q^j)
  GridValues phi = g, tele(L), corr(L, 0.0);
  for (std::size_t j = 1; j < c.J; ++j)
    for (std::size_t i = 0; i < L; ++i) phi[i] = g[i] + q[i] * phi[i];
  for (std::size_t i = 0; i < L; ++i) {
    cplx qp = 1.0;
    for (std::size_t j = 1; j < c.J; ++j) {
      qp *= q[i];
      corr[i] += g[i] * (1.0 - qp);
    }
    tele[i] = static_cast<double>(c.J) * g[i] - corr[i];
  }
  double tele_diff = 0;
  for (std::size_t i = 0; i < L; ++i) tele_diff = std::max(tele_diff, std::abs(tele[i] - phi[i]));
  check(c, "telescoping", tele_diff, tol * static_cast<double>(c.J));
  c.phi = std::move(phi);

  const GridValues fv = evaluate_folded(f, L);
  finish(c, fv, tol);
  const double sup_f = grid_norm(fv, std::numeric_limits<double>::infinity());
  const double p = 1.0 + 1.0 / logN;
  c.ledger = {{"J", static_cast<double>(c.J)},
              {"dim", static_cast<double>(D.size())},
              {"dim_side", std::sqrt(static_cast<double>(D.size()) / logN)},
              {"min_abs_f", min_abs},
              {"inner_fg", inner_fg.real()},
              {"E", grid_inner(fv, corr).real()},
              {"N_inf", N_inf},
              {"grid_sup_f", sup_f},
              {"N_inf_rel_dev", std::abs(sup_f - N_inf) / std::max(N_inf, 1e-300)},
              {"holder_p", p},
              {"grid_lp_f", grid_norm(fv, p)}};
  return c;
}

CertifiedBound mps_analytic(const IntegerSet& B1, const IntegerSet& B2, const TrigPolynomial& E,
                            double K, const AnalyticOptions& opt) {
  if (B1.empty() && B2.empty()) throw PreconditionError("mps_analytic: B1 and B2 are both empty");
  if (!(K >= 1)) throw PreconditionError("mps_analytic: K must be at least 1");
  if (opt.ratio < 2) throw PreconditionError("mps_analytic: block ratio must be at least 2");
  const double e_l2 = E.l2_norm();
  const double e_limit = std::sqrt(static_cast<double>(B1.size())) / K;
  if (e_l2 > e_limit * (1 + 1e-12))
    throw PreconditionError("mps_analytic: ||E||_2 = " + std::to_string(e_l2) +
                            " exceeds |B1|^{1/2}/K = " + std::to_string(e_limit));

  std::vector<i64> u = B1.elements;
  u.insert(u.end(), B2.elements.begin(), B2.elements.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  const std::size_t base = static_cast<std::size_t>(std::floor(static_cast<double>(u.size()) / (K * K)));
  if (base == 0) throw PreconditionError("mps_analytic: |B1 u B2| / K^2 < 1");
  std::vector<IntegerSet> blocks;
  std::size_t pos = 0, size = base;
  const std::size_t r = static_cast<std::size_t>(opt.ratio);
  for (;;) {
    if (size > (u.size() - pos) / r) break;
    size *= r;
    blocks.push_back(make_set(std::vector<i64>(u.begin() + static_cast<long>(pos),
                                               u.begin() + static_cast<long>(pos + size))));
    pos += size;
  }
  if (blocks.empty())
    throw PreconditionError("mps_analytic: first block of " + std::to_string(base * r) +
                            " elements does not fit in " + std::to_string(u.size()));

  CertifiedBound c;
  c.variant = "analytic";
  c.J = blocks.size();
  const std::size_t J = c.J;
  const i64 deg = std::max(std::max(B1.max_abs(), B2.max_abs()), max_abs_freq(E));
  const std::size_t L = pow2_grid(deg, opt.oversample);
  c.grid_size = L;

  std::vector<GridValues> g(J), q(J);
  double tail = 0;
  for (std::size_t i = 0; i < J; ++i) {
    const double inv = 1.0 / static_cast<double>(blocks[i].size());
    g[i] = evaluate_folded(TrigPolynomial::indicator(blocks[i]).scaled(inv), L);
    GridValues a(L);
    for (std::size_t x = 0; x < L; ++x) a[x] = std::abs(g[i][x]);
    auto cn = grid_spectrum(a);
    double total = 0, high = 0;
    for (std::size_t k = 0; k < L; ++k) {
      if (std::abs(cn[k]) < opt.drop) cn[k] = 0;
      const double m2 = std::norm(cn[k]);
      total += m2;
      if (k > L / 4 && k < L - L / 4) high += m2;
    }
    tail = std::max(tail, total > 0 ? high / total : 0.0);
    // h = c(0) + 2 sum_{n<0} c(n) e(nx); index L/2 is the single frequency -L/2
    GridValues hc(L, 0.0);
    hc[0] = cn[0];
    hc[L / 2] = cn[L / 2];
    for (std::size_t k = L / 2 + 1; k < L; ++k) hc[k] = 2.0 * cn[k];
    double h_l2 = 0, pos_mass = 0;
    for (std::size_t k = 0; k < L; ++k) h_l2 += std::norm(hc[k]);
    for (std::size_t k = 1; k < L / 2; ++k) pos_mass += std::norm(hc[k]);
    GridValues h = hc;
    dft(h, +1);
    double re_dev = 0;
    q[i].resize(L);
    for (std::size_t x = 0; x < L; ++x) {
      re_dev = std::max(re_dev, std::abs(h[x].real() - a[x].real()));
      q[i][x] = std::exp(-h[x]);
    }
    const std::string tag = "block" + std::to_string(i + 1) + ".";
    check(c, tag + "re_h", re_dev, opt.tol);
    if (re_dev > opt.tol) c.downgraded = true;
    check(c, tag + "one_sided", h_l2 > 0 ? pos_mass / h_l2 : 0.0, 1e-10);
    check(c, tag + "l2_h", std::sqrt(h_l2), 2.0 * std::sqrt(inv) + opt.tol);
    check(c, tag + "sup_q", grid_norm(q[i], std::numeric_limits<double>::infinity()), 1.0 + opt.tol);
    check(c, tag + "one_minus_q", one_minus_q_excess(q[i], h), opt.tol);
    check(c, tag + "sup_g", grid_norm(g[i], std::numeric_limits<double>::infinity()), 1.0 + opt.tol);
  }
  c.phi = recursion(g, q);

  const GridValues fv = evaluate_folded(TrigPolynomial::indicator(B1) + TrigPolynomial::indicator(B2), L);
  const GridValues ev = evaluate_folded(E, L);
  GridValues target(L);
  for (std::size_t x = 0; x < L; ++x) target[x] = fv[x] + ev[x];

  // suffix[k] = Q_{k+1} ... Q_J (0-based: product over indices > k)
  std::vector<GridValues> suffix(J, GridValues(L, 1.0));
  for (std::size_t k = J - 1; k-- > 0;) suffix[k] = mul(suffix[k + 1], q[k + 1]);
  cplx sum_fg = 0, e1 = 0, e2 = 0;
  GridValues prefix(L, 0.0);  // sum_{j<k} g_j
  for (std::size_t k = 0; k < J; ++k) {
    sum_fg += grid_inner(fv, g[k]);
    if (k > 0) {
      GridValues w(L);
      for (std::size_t x = 0; x < L; ++x) w[x] = prefix[x] * (1.0 - q[k][x]) * suffix[k][x];
      e1 += grid_inner(fv, w);
    }
    e2 += grid_inner(ev, mul(g[k], suffix[k]));
    for (std::size_t x = 0; x < L; ++x) prefix[x] += g[k][x];
  }
  const cplx lhs = grid_inner(target, c.phi);
  check(c, "telescoping", std::abs(lhs - (sum_fg - e1 + e2)), opt.tol * static_cast<double>(J));
  const double rr = static_cast<double>(r);
  const double e1_bound = static_cast<double>(J) * 4.0 * std::sqrt(rr / (rr - 1)) / (std::sqrt(rr) - 1);
  double e2_cs = 0;
  for (const auto& b : blocks) e2_cs += e_l2 / std::sqrt(static_cast<double>(b.size()));
  check(c, "E1", std::abs(e1), e1_bound + opt.tol);
  check(c, "E2", std::abs(e2), 1.0);
  finish(c, target, opt.tol);
  c.ledger = {{"J", static_cast<double>(J)},
              {"base", static_cast<double>(base)},
              {"ratio", rr},
              {"sum_fg", sum_fg.real()},
              {"E1", std::abs(e1)},
              {"E1_bound", e1_bound},
              {"E2", std::abs(e2)},
              {"E2_cauchy_schwarz", e2_cs},
              {"proof_bound", static_cast<double>(J) - e1_bound - 1.0},
              {"spectral_tail", tail}};
  for (std::size_t i = 0; i < J; ++i)
    c.ledger.emplace_back("block" + std::to_string(i + 1) + ".size", static_cast<double>(blocks[i].size()));
  return c;
}

CertifiedBound mps_modular(const IntegerSet& B, const std::vector<std::pair<i64, i64>>& chain,
                           const TrigPolynomial& E, int oversample, double tol) {
  if (chain.empty()) throw PreconditionError("mps_modular: empty chain");
  CertifiedBound c;
  c.variant = "modular";
  c.J = chain.size();
  const std::size_t J = c.J;
  std::vector<std::pair<i64, i64>> rq;
  i64 lcm = 1;
  for (auto [r, q] : chain) {
    if (q <= 0) throw PreconditionError("mps_modular: moduli must be positive");
    rq.emplace_back(mod_pos(r, q), q);
    lcm = checked_mul(lcm / std::gcd(lcm, q), q);
  }
  std::vector<IntegerSet> bi;
  for (std::size_t i = 0; i < J; ++i) {
    std::vector<i64> v;
    for (i64 n : B.elements)
      if (mod_pos(n, rq[i].second) == rq[i].first) v.push_back(n);
    if (v.empty())
      throw PreconditionError("mps_modular: class " + std::to_string(i + 1) + " meets B in nothing");
    bi.push_back(make_set(std::move(v)));
  }
  // hypotheses, one audit item each
  for (std::size_t i = 0; i + 1 < J; ++i) {
    const std::string tag = "hyp" + std::to_string(i + 1) + ".";
    check(c, tag + "divides", rq[i + 1].second % rq[i].second == 0 ? 0.0 : 1.0, 0.0);
    check(c, tag + "growth", 10.0 * static_cast<double>(bi[i].size()) - static_cast<double>(bi[i + 1].size()), -0.5);
  }
  double clash = 0;
  for (std::size_t i = 0; i < J; ++i)
    for (std::size_t j = i + 1; j < J; ++j) {
      i64 gg = std::gcd(rq[i].second, rq[j].second);
      if (mod_pos(rq[i].first - rq[j].first, gg) == 0) clash += 1;
    }
  check(c, "hyp.disjoint", clash, 0.0);
  for (std::size_t i = 0; i < J; ++i) {
    const double pn = project_residue(E, rq[i].first, rq[i].second).l2_norm();
    check(c, "hyp" + std::to_string(i + 1) + ".proj_E", pn,
          std::sqrt(static_cast<double>(bi[i].size())) / 10.0);
  }

  const i64 deg = std::max(B.max_abs(), max_abs_freq(E));
  const std::size_t target_size = static_cast<std::size_t>(oversample) * static_cast<std::size_t>(deg + 1);
  std::size_t L = static_cast<std::size_t>(lcm);
  while (L < target_size) L *= 2;
  c.grid_size = L;

  std::vector<GridValues> g(J), q(J);
  for (std::size_t i = 0; i < J; ++i) {
    const double inv = 1.0 / static_cast<double>(bi[i].size());
    TrigPolynomial gi = TrigPolynomial::indicator(bi[i]).scaled(inv);
    g[i] = evaluate_folded(gi, L);
    q[i] = q_of(g[i]);
    const std::string tag = "block" + std::to_string(i + 1) + ".";
    check(c, tag + "sup_g", grid_norm(g[i], std::numeric_limits<double>::infinity()), 1.0 + tol);
    check(c, tag + "one_minus_q", one_minus_q_excess(q[i], g[i]), tol);
    auto coef = grid_spectrum(q[i]);
    const std::size_t qk = static_cast<std::size_t>(rq[i].second);
    double on = 0, off = 0;
    for (std::size_t k = 0; k < L; ++k) (k % qk == 0 ? on : off) += std::norm(coef[k]);
    check(c, tag + "lattice_support", off / (on + off), 1e-16);
  }
  c.phi = recursion(g, q);

  const GridValues bv = evaluate_folded(TrigPolynomial::indicator(B), L);
  const GridValues ev = evaluate_folded(E, L);
  GridValues target(L);
  for (std::size_t x = 0; x < L; ++x) target[x] = bv[x] + ev[x];
  cplx sum_bg = 0;
  for (std::size_t j = 0; j < J; ++j) sum_bg += grid_inner(bv, g[j]);
  double second_bound = 0;
  for (std::size_t j = 0; j < J; ++j)
    for (std::size_t k = j + 1; k < J; ++k)
      second_bound += std::sqrt(static_cast<double>(bi[j].size()) / static_cast<double>(bi[k].size()));
  const cplx e_phi = grid_inner(ev, c.phi);
  const cplx b_phi = grid_inner(bv, c.phi);
  finish(c, target, tol);
  const double Jd = static_cast<double>(J);
  c.ledger = {{"J", Jd},
              {"sum_bg", sum_bg.real()},
              {"second_term", std::abs(sum_bg - b_phi)},
              {"second_bound", second_bound},
              {"second_bound_proof", Jd / (std::sqrt(10.0) - 1)},
              {"E_phi", std::abs(e_phi)},
              {"E_phi_bound", Jd / 10.0},
              {"ledger_bound", Jd * (1 - 1 / (std::sqrt(10.0) - 1) - 0.1) / 10.0}};
  for (std::size_t i = 0; i < J; ++i)
    c.ledger.emplace_back("block" + std::to_string(i + 1) + ".size", static_cast<double>(bi[i].size()));
  return c;
}

EnergyReport energy_inverse_check(const TrigPolynomial& f, const std::vector<IntegerSet>& X,
                                  double N, int oversample) {
  EnergyReport r;
  const std::size_t L = pow2_grid(max_abs_freq(f), oversample);
  r.f_l1 = grid_norm(evaluate_folded(f, L), 1.0);
  r.f_l2 = f.l2_norm();
  r.N = N > 0 ? N : r.f_l2 * r.f_l2;
  r.c_l2 = r.N > 0 ? r.f_l2 / std::sqrt(r.N) : 0.0;
  r.K = X.size();
  r.K_required = static_cast<std::size_t>(std::ceil(100.0 * r.f_l1));
  const double K2 = static_cast<double>(r.K) * static_cast<double>(r.K);
  for (const auto& x : X) {
    double m = std::numeric_limits<double>::infinity();
    for (i64 n : x.elements) m = std::min(m, std::abs(f.coeff(n)));
    r.min_abs_f.push_back(x.empty() ? 0.0 : m);
    if (x.empty() || m < 0.5) r.min_ok = false;
    const std::uint64_t e = additive_energy(x);
    r.self_energy.push_back(e);
    const double s = static_cast<double>(x.size());
    r.energy_ratio.push_back(x.empty() ? 0.0 : static_cast<double>(e) * r.N * r.f_l1 * r.f_l1 / (s * s * s * s));
  }
  for (std::size_t j = 0; j < X.size(); ++j)
    for (std::size_t k = j + 1; k < X.size(); ++k) {
      EnergyPair p{j, k, additive_energy(X[j], X[k]), 0.0};
      const double a = static_cast<double>(X[j].size()), b = static_cast<double>(X[k].size());
      if (a > 0 && b > 0) p.ratio = static_cast<double>(p.energy) * r.N * K2 / (a * a * b * b);
      r.max_ratio = std::max(r.max_ratio, p.ratio);
      r.pairs.push_back(p);
    }
  return r;
}

RudinCheck rudin_check(const TrigPolynomial& f, double p, int oversample) {
  std::vector<i64> supp;
  for (const auto& t : f.terms()) supp.push_back(t.first);
  if (!is_dissociated(supp)) throw PreconditionError("rudin_check: support is not dissociated");
  RudinCheck r;
  r.p = p;
  const GridValues v = evaluate_folded(f, pow2_grid(max_abs_freq(f), oversample));
  r.lp = grid_norm(v, p);
  r.l2 = f.l2_norm();
  r.ratio = r.l2 > 0 ? r.lp / (std::sqrt(p) * r.l2) : 0.0;
  r.holds = r.ratio <= 10.0;
  return r;
}

}  // namespace sf
