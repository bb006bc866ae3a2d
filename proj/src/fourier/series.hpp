#pragma once

#include <vector>

#include "core/trig_poly.hpp"

namespace sf {

// -1/3 off the open interval (1/3, 2/3), 2/3 inside. x taken mod 1.
double phi_minus_third(double x);
double phi_minus_third_rational(i64 num, i64 den);

struct SumFreeSpectrum {
  IntegerSet A;
  i64 M = 0;
  double Q = 0;          // 0 when no remainder was requested
  TrigPolynomial F;      // sum_a sum_{n<=M} chi(n)/n cos(2 pi n a x)
  TrigPolynomial cA;     // sum_a cos(2 pi a x)
  TrigPolynomial RQ;     // sum_a sum_{1<n<=M, n Q-rough} chi(n)/n cos(2 pi n a x)
};

struct SeriesBudget {
  std::size_t max_terms = 200'000'000;
};

SumFreeSpectrum build_FA(const IntegerSet& A, i64 M, double Q = 0, SeriesBudget b = {});
TrigPolynomial build_cA(const IntegerSet& A);
TrigPolynomial build_RQ(const IntegerSet& A, double Q, i64 M, SeriesBudget b = {});

// Sup of the partial sums of chi(n) cos(2 pi n t): 1 + 2|sin pi t|/|sin 3 pi t|.
double chi_partial_sum_bound(double t);
// Pointwise bound on |F_A(x) - F_A^{(M)}(x)| by Abel summation.
double fa_tail_bound(const IntegerSet& A, i64 M, double x);

struct SiftResult {
  TrigPolynomial poly;
  std::vector<i64> ks;          // squarefree divisors k of prod_{p<=Q} p with chi(k) != 0, k <= M
  std::vector<double> weights;  // mu(k) chi(k) / k
  double weight_l1 = 0;         // sum over all divisors of |mu(k) chi(k)/k|
  double weight_product = 0;    // prod_{p<=Q} (1 + 1/p)
};

// Sum_k mu(k) chi(k)/k F(kx). The k-th dilate keeps only n <= M/k, so every
// multiplier m = kn <= M is complete and the result equals c_A + R_Q
// truncated at M coefficient by coefficient.
SiftResult sift(const SumFreeSpectrum& series, double Q, SeriesBudget b = {});
// Pointwise bound on |sift - (c_A + R_Q)| against the untruncated series.
double sift_tail_bound(const SiftResult& s, const IntegerSet& A, i64 M, double x);

struct RqCoefficientReport {
  double max_abs_coefficient = 0;  // cosine amplitude 2|R^(m)|
  i64 argmax = 0;
  double log_t_over_q = 0;
  double ratio = 0;
  bool divisor_bound_ok = true;  // |coef(m)| <= sum over rough n | m, m/n in A of 1/n
  bool unique_b_ok = true;       // each rough n | m contributes at most once
  std::size_t frequencies = 0;
};

RqCoefficientReport rq_coefficient_bound(const IntegerSet& A, double Q, i64 T, i64 M);

struct GeneralContInstance {
  double Q1 = 3;
  double Q = 50;
  i64 T = 1000;
  i64 k = 1;
  std::size_t K = 4;
  std::vector<int> nu;                  // per prime p <= Q1
  i64 r = 1;                            // residue mod prod_{p<=Q1} p
  std::vector<std::pair<i64, std::vector<i64>>> classes;  // (s, B_s)
};

struct GeneralContReport {
  double norm = 0;       // ||E * V_T||_2
  double bound = 0;      // log T * Q^{-1/2} * K^{1/2}
  double ratio = 0;
  std::size_t terms = 0;
};

// Throws PreconditionError naming the violated hypothesis.
GeneralContReport l2_truncation_check(const GeneralContInstance& inst);

}  // namespace sf
