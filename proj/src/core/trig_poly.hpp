#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "core/integer_set.hpp"

namespace sf {

using cplx = std::complex<double>;
using Term = std::pair<i64, cplx>;

// Finitely supported frequency -> coefficient map, stored sorted by frequency
// with exact zeros removed.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;

  // Terms sharing a frequency are summed in their input order.
  static TrigPolynomial from_terms(std::vector<Term> terms);
  static TrigPolynomial monomial(i64 n, cplx c = 1.0);
  static TrigPolynomial cosine(i64 n, double amp = 1.0);
  static TrigPolynomial indicator(const IntegerSet& b);
  // Real series sum amp * cos(2 pi f x) from (f, amp) pairs with f > 0;
  // repeated frequencies are summed after sorting by (f, amp).
  static TrigPolynomial from_cosines(std::vector<std::pair<i64, double>> cos_terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  cplx coeff(i64 n) const;
  i64 degree() const;
  bool is_real(double tol = 0.0) const;
  double l2_norm() const;  // sqrt(sum |c|^2)

  cplx eval_at(double x) const;  // direct summation

  TrigPolynomial operator+(const TrigPolynomial& o) const;
  TrigPolynomial operator-(const TrigPolynomial& o) const;
  TrigPolynomial scaled(cplx s) const;
  // Replaces x by k*x: frequency n becomes k*n.
  TrigPolynomial dilated(i64 k) const;
  TrigPolynomial conj_reflect() const;  // conj(p(x)) as a polynomial

 private:
  std::vector<Term> terms_;
};

TrigPolynomial convolve(const TrigPolynomial& f, const TrigPolynomial& g);

// Largest absolute coefficient difference over the union of supports.
double max_coeff_diff(const TrigPolynomial& a, const TrigPolynomial& b);

}  // namespace sf
