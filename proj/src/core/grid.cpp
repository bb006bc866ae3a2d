#include "core/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "core/errors.hpp"

namespace sf {

namespace {

// The FFTW planner is not thread-safe; executing an existing plan on new
// arrays is.
std::mutex plan_mutex;
std::map<std::pair<std::size_t, int>, fftw_plan> plan_cache;

fftw_plan get_plan(std::size_t n, int sign) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto key = std::make_pair(n, sign);
  auto it = plan_cache.find(key);
  if (it != plan_cache.end()) return it->second;
  auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                                 sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  plan_cache.emplace(key, p);
  return p;
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

TorusGrid grid_for(i64 degree, int oversample) {
  TorusGrid g;
  g.M = next_pow2(static_cast<std::size_t>(oversample) * static_cast<std::size_t>(degree + 1));
  g.oversample = static_cast<double>(g.M) / static_cast<double>(degree + 1);
  return g;
}

TorusGrid grid_for(const TrigPolynomial& p, int oversample) {
  return grid_for(p.degree(), oversample);
}

void dft(std::vector<cplx>& data, int sign) {
  if (data.empty()) return;
  fftw_plan p = get_plan(data.size(), sign);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p, ptr, ptr);
}

GridValues evaluate_folded(const TrigPolynomial& p, std::size_t L) {
  std::vector<cplx> buf(L, 0.0);
  const i64 l = static_cast<i64>(L);
  for (const auto& [n, c] : p.terms()) {
    i64 k = n % l;
    if (k < 0) k += l;
    buf[static_cast<std::size_t>(k)] += c;
  }
  dft(buf, +1);
  return buf;
}

GridValues evaluate(const TrigPolynomial& p, const TorusGrid& g) {
  if (g.M < 8 * static_cast<std::size_t>(p.degree() + 1))
    throw PreconditionError("evaluate: grid of " + std::to_string(g.M) +
                            " points undersamples degree " + std::to_string(p.degree()));
  return evaluate_folded(p, g.M);
}

std::vector<cplx> grid_spectrum(const GridValues& v) {
  std::vector<cplx> buf = v;
  dft(buf, -1);
  const double inv = 1.0 / static_cast<double>(buf.size());
  for (auto& x : buf) x *= inv;
  return buf;
}

TrigPolynomial coefficients_from_grid(const GridValues& v, double drop_below) {
  auto coef = grid_spectrum(v);
  const i64 M = static_cast<i64>(coef.size());
  std::vector<Term> t;
  for (i64 k = 0; k < M; ++k) {
    cplx c = coef[static_cast<std::size_t>(k)];
    if (std::abs(c) <= drop_below) continue;
    t.emplace_back(k < M / 2 ? k : k - M, c);
  }
  return TrigPolynomial::from_terms(std::move(t));
}

double grid_norm(const GridValues& v, double pexp) {
  if (pexp < 1) throw PreconditionError("norm: p must be >= 1");
  if (std::isinf(pexp)) {
    double m = 0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
  }
  double s = 0;
  for (const auto& x : v) s += std::pow(std::abs(x), pexp);
  return std::pow(s / static_cast<double>(v.size()), 1.0 / pexp);
}

double norm_lp(const TrigPolynomial& p, double pexp, const TorusGrid& g, NormMode mode) {
  if (pexp < 1) throw PreconditionError("norm: p must be >= 1");
  if (mode == NormMode::Exact) {
    if (pexp != 2.0) throw PreconditionError("exact norm mode is only defined for p = 2");
    return p.l2_norm();
  }
  return grid_norm(evaluate(p, g), pexp);
}

cplx grid_inner(const GridValues& a, const GridValues& b) {
  if (a.size() != b.size()) throw PreconditionError("grid_inner: size mismatch");
  cplx s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * std::conj(b[j]);
  return s / static_cast<double>(a.size());
}

}  // namespace sf
