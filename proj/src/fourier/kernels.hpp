#pragma once

#include "core/grid.hpp"
#include "core/trig_poly.hpp"

namespace sf {

// Coefficient 1 for |n| <= T, (2T - |n|)/T for T < |n| < 2T, 0 beyond.
TrigPolynomial vp_kernel(i64 T);
double vp_coefficient(i64 T, i64 n);

// Keeps the coefficients at frequencies congruent to ell mod q.
TrigPolynomial project_residue(const TrigPolynomial& p, i64 ell, i64 q);

// (1/q) sum_j e(-ell j/q) p(x + j/q) at the points of g, by direct summation.
GridValues project_residue_by_shifts(const TrigPolynomial& p, i64 ell, i64 q, const TorusGrid& g);

}  // namespace sf
