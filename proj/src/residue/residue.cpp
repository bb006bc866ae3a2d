#include "residue/residue.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

#include "core/errors.hpp"
#include "core/number_theory.hpp"
#include "core/trig_poly.hpp"
#include "fourier/kernels.hpp"

namespace sf {

bool precedes_or_equal(const std::vector<int>& mu, const std::vector<int>& nu) {
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > nu[i]) return false;
  return true;
}

bool precedes(const std::vector<int>& mu, const std::vector<int>& nu) {
  return precedes_or_equal(mu, nu) && mu != nu;
}

i64 ResidueTree::prime_product() const {
  i64 p = 1;
  for (i64 q : primes) p = checked_mul(p, q);
  return p;
}

i64 ResidueTree::canonical(const std::vector<i64>& r) const {
  i64 x = 0, m = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const i64 p = primes[i];
    // x + m t = r_i (mod p)
    i64 t = mul_mod(mod_pos(r[i] - x, p), mod_inverse(m % p, p), p);
    x += m * t;
    m *= p;
  }
  return x;
}

std::vector<i64> ResidueTree::split(i64 r) const {
  std::vector<i64> out;
  for (i64 p : primes) out.push_back(mod_pos(r, p));
  return out;
}

std::pair<ResidueSignature, std::size_t> ResidueTree::level_max(const std::vector<int>& nu) const {
  ResidueSignature best;
  std::size_t size = 0;
  i64 best_canon = 0;
  for (const auto& [sig, members] : classes) {
    if (sig.nu != nu) continue;
    i64 c = canonical(sig.r);
    if (members.size() > size || (members.size() == size && size > 0 && c < best_canon)) {
      best = sig;
      size = members.size();
      best_canon = c;
    }
  }
  if (size == 0) best.nu = nu;
  return {best, size};
}

std::vector<std::vector<int>> ResidueTree::levels() const {
  std::set<std::vector<int>> s;
  for (const auto& [sig, m] : classes) s.insert(sig.nu);
  return {s.begin(), s.end()};
}

std::size_t ResidueTree::class_size(const ResidueSignature& s) const {
  auto it = classes.find(s);
  return it == classes.end() ? 0 : it->second.size();
}

ResidueSignature signature_of(i64 a, const std::vector<i64>& primes) {
  if (a == 0) throw PreconditionError("residue signature of 0");
  ResidueSignature s;
  i64 u = a;
  for (i64 p : primes) {
    int v = 0;
    while (u % p == 0) {
      u /= p;
      ++v;
    }
    s.nu.push_back(v);
  }
  for (i64 p : primes) s.r.push_back(mod_pos(u, p));
  return s;
}

ResidueTree decompose(const IntegerSet& a, double q1) {
  if (a.contains(0)) throw PreconditionError("decompose: 0 in A");
  ResidueTree t;
  t.q1 = q1;
  t.primes = primes_upto(static_cast<i64>(std::floor(q1)));
  for (i64 x : a.elements) t.classes[signature_of(x, t.primes)].push_back(x);
  t.N = a.size();
  return t;
}

LargestClass largest_class(const ResidueTree& t, std::size_t dim_bound) {
  if (t.classes.empty()) throw PreconditionError("largest_class: empty tree");
  if (dim_bound == 0) throw PreconditionError("largest_class: dimension bound must be positive");
  LargestClass lc;
  i64 best_canon = 0;
  for (const auto& [sig, members] : t.classes) {
    i64 c = t.canonical(sig.r);
    bool better = members.size() > lc.size ||
                  (members.size() == lc.size && (sig.nu < lc.signature.nu ||
                                                 (sig.nu == lc.signature.nu && c < best_canon)));
    if (better) {
      lc.signature = sig;
      lc.size = members.size();
      best_canon = c;
    }
  }
  lc.bound = static_cast<double>(t.N) /
             (std::pow(static_cast<double>(dim_bound), static_cast<double>(t.primes.size())) *
              static_cast<double>(t.prime_product()));
  lc.bound_ok = static_cast<double>(lc.size) >= lc.bound;
  return lc;
}

Chain find_chain(const ResidueTree& t, double g, std::size_t seed_threshold) {
  auto lv = t.levels();
  std::stable_sort(lv.begin(), lv.end(), [](const auto& x, const auto& y) {
    int sx = 0, sy = 0;
    for (int v : x) sx += v;
    for (int v : y) sy += v;
    return sx < sy;
  });
  const std::size_t n = lv.size();
  std::vector<std::pair<ResidueSignature, std::size_t>> mx;
  for (const auto& nu : lv) mx.push_back(t.level_max(nu));
  std::vector<std::size_t> len(n, 1);
  std::vector<long> prev(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (!precedes(lv[j], lv[i])) continue;
      if (static_cast<double>(mx[i].second) < g * static_cast<double>(mx[j].second)) continue;
      if (len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        prev[i] = static_cast<long>(j);
      }
    }
  long top = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (mx[i].second < seed_threshold) continue;
    if (top < 0 || len[i] > len[top] || (len[i] == len[top] && mx[i].second > mx[top].second))
      top = static_cast<long>(i);
  }
  if (top < 0) throw PreconditionError("find_chain: no class reaches the seed threshold");
  Chain c;
  c.growth = g;
  for (long i = top; i >= 0; i = prev[i])
    c.steps.push_back({mx[i].first, t.classes.at(mx[i].first)});
  std::reverse(c.steps.begin(), c.steps.end());
  return c;
}

ChainAudit audit_chain(const ResidueTree& t, const Chain& c) {
  ChainAudit a;
  std::ostringstream why;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& s = c.steps[i];
    auto lm = t.level_max(s.signature.nu);
    auto it = t.classes.find(s.signature);
    if (it == t.classes.end() || it->second != s.members) {
      a.members_match = false;
      why << "step " << i << " members differ; ";
    }
    if (s.members.size() != lm.second) {
      a.maximal = false;
      why << "step " << i << " not a level maximiser; ";
    }
    if (i + 1 < c.steps.size()) {
      const auto& nx = c.steps[i + 1];
      if (!precedes(s.signature.nu, nx.signature.nu)) {
        a.strict_order = false;
        why << "steps " << i << "," << i + 1 << " not strictly ordered; ";
      }
      if (static_cast<double>(nx.members.size()) < c.growth * static_cast<double>(s.members.size())) {
        a.growth = false;
        why << "steps " << i << "," << i + 1 << " growth below factor; ";
      }
    }
  }
  a.detail = why.str();
  return a;
}

std::vector<i64> valuation_witness(const IntegerSet& a, i64 p) {
  std::map<int, i64> first;
  for (i64 x : a.elements) first.emplace(valuation(x, p), x);
  std::vector<i64> out;
  for (const auto& [v, x] : first) out.push_back(x);
  return out;
}

std::string signature_string(const ResidueTree& t, const ResidueSignature& s) {
  std::ostringstream o;
  o << "r=(";
  for (std::size_t i = 0; i < s.r.size(); ++i) o << (i ? "," : "") << s.r[i];
  o << ") nu=(";
  bool first = true;
  for (std::size_t i = 0; i < s.nu.size(); ++i)
    if (s.nu[i] > 0) {
      o << (first ? "" : ",") << t.primes[i] << "^" << s.nu[i];
      first = false;
    }
  o << ")";
  return o.str();
}

namespace {

// Sum over classes s at level mu of the n' > 1 terms; frequencies with
// n' k |a| beyond the limit are dropped.
TrigPolynomial error_term(const ResidueTree& t, const std::vector<int>& mu, i64 r, i64 k,
                          const std::vector<char>& rough, i64 limit, bool limit_is_multiplier) {
  const i64 P = t.prime_product();
  std::vector<Term> terms;
  for (const auto& [sig, members] : t.classes) {
    if (sig.nu != mu) continue;
    const i64 s = t.canonical(sig.r);
    const i64 sinv = mod_inverse(s, P);
    const i64 plus = mod_pos(mul_mod(r, sinv, P), P);
    const i64 minus = mod_pos(-plus, P);
    for (i64 a : members) {
      const i64 step = checked_mul(k, std::abs(a));
      const i64 nmax = limit_is_multiplier ? limit / k : (limit - 1) / step;
      for (i64 n = 2; n <= nmax && n < static_cast<i64>(rough.size()); ++n) {
        if (!rough[n] || chi(n) == 0) continue;
        const double c = chi(n) / static_cast<double>(n);
        const i64 f = n * k * a;
        if (mod_pos(n, P) == plus) terms.emplace_back(f, c);
        if (mod_pos(n, P) == minus) terms.emplace_back(-f, c);
      }
    }
  }
  return TrigPolynomial::from_terms(std::move(terms));
}

std::vector<char> rough_table(i64 upto, double Q) {
  std::vector<char> rough(static_cast<std::size_t>(std::max<i64>(upto, 1)) + 1, 1);
  for (i64 p : primes_upto(std::min<i64>(upto, static_cast<i64>(std::floor(Q)))))
    for (i64 j = p; j <= upto; j += p) rough[j] = 0;
  return rough;
}

}  // namespace

DichotomyReport dichotomy_probe(const IntegerSet& a, double q1, double q, i64 T, i64 M, double scale) {
  if (a.empty()) throw PreconditionError("dichotomy_probe: empty set");
  if (a.max_abs() > T) throw PreconditionError("dichotomy_probe: A must lie in [-T, T]");
  if (q < q1) throw PreconditionError("dichotomy_probe: Q must be at least Q1");
  ResidueTree t = decompose(a, q1);
  DichotomyReport rep;
  const double logN = std::log(static_cast<double>(std::max<std::size_t>(a.size(), 2)));
  rep.scale = scale > 0 ? scale : std::pow(logN, 4);
  LargestClass lc = largest_class(t, 1);
  rep.top = lc.signature;
  rep.top_size = lc.size;
  const auto& nu = rep.top.nu;

  // all mu < nu by single-coordinate decrements
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue{nu};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] == 0) continue;
      auto d = cur;
      --d[i];
      if (seen.insert(d).second) queue.push_back(d);
    }
  }
  for (const auto& mu : seen) {
    PredecessorInfo pi;
    pi.nu = mu;
    pi.max_class = t.level_max(mu).second;
    pi.clears = pi.max_class > 0 &&
                static_cast<double>(pi.max_class) >= static_cast<double>(rep.top_size) / rep.scale;
    rep.predecessors.push_back(pi);
  }
  for (auto& pi : rep.predecessors) {
    if (!pi.clears) continue;
    pi.minimal_clearing = true;
    for (const auto& other : rep.predecessors)
      if (other.clears && precedes(other.nu, pi.nu)) pi.minimal_clearing = false;
    rep.predecessor_clears = true;
  }

  // medium primes: Q1 < p <= Q
  std::vector<i64> med;
  for (i64 p : primes_upto(static_cast<i64>(std::floor(q))))
    if (static_cast<double>(p) > q1) med.push_back(p);
  rep.medium_primes_range = {static_cast<i64>(std::floor(q1)), static_cast<i64>(std::floor(q))};
  std::vector<char> coprime(static_cast<std::size_t>(M) + 1, 1);
  for (i64 p : med)
    for (i64 j = p; j <= M; j += p) coprime[j] = 0;
  std::vector<Term> fm;
  for (i64 x : a.elements)
    for (i64 n = 1; n <= M; ++n) {
      if (!coprime[n] || chi(n) == 0) continue;
      const double c = chi(n) / (2.0 * static_cast<double>(n));
      fm.emplace_back(checked_mul(n, x), c);
      fm.emplace_back(-n * x, c);
    }
  TrigPolynomial fmed = TrigPolynomial::from_terms(std::move(fm));

  const i64 P = t.prime_product();
  i64 Pnu = 1;
  for (std::size_t i = 0; i < t.primes.size(); ++i)
    for (int e = 0; e < nu[i]; ++e) Pnu = checked_mul(Pnu, t.primes[i]);
  const i64 r = t.canonical(rep.top.r);
  const i64 modulus = checked_mul(P, Pnu);
  TrigPolynomial proj = project_residue(fmed, checked_mul(r, Pnu), modulus);
  rep.projection_terms = proj.size();

  auto rough_M = rough_table(M, q);
  auto rough_T = rough_table(2 * T, q);
  TrigPolynomial assembled;
  TrigPolynomial vt = vp_kernel(T);
  std::vector<std::vector<int>> mus(seen.begin(), seen.end());
  mus.push_back(nu);
  for (const auto& mu : mus) {
    i64 k = 1;
    for (std::size_t i = 0; i < t.primes.size(); ++i)
      for (int e = mu[i]; e < nu[i]; ++e) k = checked_mul(k, t.primes[i]);
    const double w = chi(k) / (2.0 * static_cast<double>(k));
    ResidueSignature plus_sig{rep.top.r, mu};
    ResidueSignature minus_sig{t.split(mod_pos(-r, P)), mu};
    std::vector<Term> main;
    if (k <= M) {
      if (auto it = t.classes.find(plus_sig); it != t.classes.end())
        for (i64 x : it->second) main.emplace_back(x * k, 1.0);
      if (auto it = t.classes.find(minus_sig); it != t.classes.end())
        for (i64 x : it->second) main.emplace_back(-x * k, 1.0);
    }
    TrigPolynomial piece = TrigPolynomial::from_terms(std::move(main)) +
                           error_term(t, mu, r, k, rough_M, M, true);
    assembled = assembled + piece.scaled(w);

    MuContribution mc;
    mc.mu = mu;
    mc.k = k;
    mc.max_class = t.level_max(mu).second;
    TrigPolynomial e = error_term(t, mu, r, k, rough_T, 2 * T, false);
    mc.e_norm = convolve(e, vt).l2_norm();
    mc.bound = std::sqrt(static_cast<double>(rep.top_size)) / (logN * logN);
    mc.ratio = mc.e_norm / mc.bound;
    rep.contributions.push_back(mc);
  }
  rep.decomposition_max_diff = max_coeff_diff(proj, assembled);
  return rep;
}

}  // namespace sf
