#pragma once

#include <vector>

#include "core/trig_poly.hpp"

namespace sf {

using GridValues = std::vector<cplx>;

struct TorusGrid {
  std::size_t M = 8;
  double oversample = 8.0;  // M / (degree+1) actually achieved
};

std::size_t next_pow2(std::size_t n);
TorusGrid grid_for(i64 degree, int oversample = 8);
TorusGrid grid_for(const TrigPolynomial& p, int oversample = 8);

// In-place DFT. sign=+1 evaluates (sum c_k e(jk/n)), sign=-1 analyses
// (sum v_j e(-jk/n), unnormalised). Any length n >= 1.
void dft(std::vector<cplx>& data, int sign);

// values[j] = p(j/M). Rejects grids with M < 8(degree+1).
GridValues evaluate(const TrigPolynomial& p, const TorusGrid& g);
// Exact values at j/L for polynomials of any degree (frequencies folded mod L).
GridValues evaluate_folded(const TrigPolynomial& p, std::size_t L);
// c(n) for n in [-M/2, M/2), returned as terms with |c| > drop_below.
TrigPolynomial coefficients_from_grid(const GridValues& v, double drop_below = 0.0);
// Raw DFT coefficients indexed by k in [0, M): c_k = (1/M) sum v_j e(-jk/M).
std::vector<cplx> grid_spectrum(const GridValues& v);

enum class NormMode { Grid, Exact };
double norm_lp(const TrigPolynomial& p, double pexp, const TorusGrid& g,
               NormMode mode = NormMode::Grid);
double grid_norm(const GridValues& v, double pexp);  // pexp = inf for max
// (1/M) sum a_j conj(b_j)
cplx grid_inner(const GridValues& a, const GridValues& b);

}  // namespace sf
