#include "fourier/kernels.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/number_theory.hpp"

namespace sf {

double vp_coefficient(i64 T, i64 n) {
  const i64 a = std::abs(n);
  if (a <= T) return 1.0;
  if (a >= 2 * T) return 0.0;
  return static_cast<double>(2 * T - a) / static_cast<double>(T);
}

TrigPolynomial vp_kernel(i64 T) {
  if (T < 1) throw PreconditionError("vp_kernel: T must be at least 1");
  std::vector<Term> t;
  for (i64 n = -2 * T + 1; n <= 2 * T - 1; ++n) t.emplace_back(n, vp_coefficient(T, n));
  return TrigPolynomial::from_terms(std::move(t));
}

TrigPolynomial project_residue(const TrigPolynomial& p, i64 ell, i64 q) {
  if (q < 1) throw PreconditionError("project_residue: q must be at least 1");
  const i64 target = mod_pos(ell, q);
  std::vector<Term> t;
  for (const auto& term : p.terms())
    if (mod_pos(term.first, q) == target) t.push_back(term);
  return TrigPolynomial::from_terms(std::move(t));
}

GridValues project_residue_by_shifts(const TrigPolynomial& p, i64 ell, i64 q, const TorusGrid& g) {
  if (q < 1) throw PreconditionError("project_residue: q must be at least 1");
  GridValues out(g.M, 0.0);
  for (std::size_t j = 0; j < g.M; ++j) {
    const double x = static_cast<double>(j) / static_cast<double>(g.M);
    cplx s = 0;
    for (i64 k = 0; k < q; ++k) {
      const double ph = -2 * std::numbers::pi * static_cast<double>(mod_pos(ell * k, q)) / static_cast<double>(q);
      s += cplx(std::cos(ph), std::sin(ph)) * p.eval_at(x + static_cast<double>(k) / static_cast<double>(q));
    }
    out[j] = s / static_cast<double>(q);
  }
  return out;
}

}  // namespace sf
