#include "core/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sf {

TrigPolynomial TrigPolynomial::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  TrigPolynomial p;
  p.terms_.reserve(terms.size());
  for (const auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(t);
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.second == cplx(0.0, 0.0); });
  return p;
}

TrigPolynomial TrigPolynomial::monomial(i64 n, cplx c) { return from_terms({{n, c}}); }

TrigPolynomial TrigPolynomial::cosine(i64 n, double amp) {
  if (n == 0) return monomial(0, amp);
  return from_terms({{n, amp / 2}, {-n, amp / 2}});
}

TrigPolynomial TrigPolynomial::indicator(const IntegerSet& b) {
  std::vector<Term> t;
  t.reserve(b.size());
  for (i64 x : b.elements) t.emplace_back(x, 1.0);
  return from_terms(std::move(t));
}

TrigPolynomial TrigPolynomial::from_cosines(std::vector<std::pair<i64, double>> c) {
  std::sort(c.begin(), c.end());
  std::size_t w = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (w > 0 && c[w - 1].first == c[i].first)
      c[w - 1].second += c[i].second;
    else
      c[w++] = c[i];
  }
  c.resize(w);
  std::erase_if(c, [](const auto& t) { return t.second == 0.0; });
  c.shrink_to_fit();
  TrigPolynomial p;
  p.terms_.resize(2 * c.size());
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    p.terms_[n - 1 - i] = {-c[i].first, c[i].second / 2};
    p.terms_[n + i] = {c[i].first, c[i].second / 2};
  }
  return p;
}

cplx TrigPolynomial::coeff(i64 n) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), n,
                             [](const Term& t, i64 v) { return t.first < v; });
  if (it != terms_.end() && it->first == n) return it->second;
  return 0.0;
}

i64 TrigPolynomial::degree() const {
  if (terms_.empty()) return 0;
  return std::max(std::abs(terms_.front().first), std::abs(terms_.back().first));
}

bool TrigPolynomial::is_real(double tol) const {
  for (const auto& [n, c] : terms_)
    if (std::abs(coeff(-n) - std::conj(c)) > tol) return false;
  return true;
}

double TrigPolynomial::l2_norm() const {
  double s = 0;
  for (const auto& t : terms_) s += std::norm(t.second);
  return std::sqrt(s);
}

cplx TrigPolynomial::eval_at(double x) const {
  cplx s = 0;
  for (const auto& [n, c] : terms_) {
    long double ph = static_cast<long double>(n) * x;
    ph -= std::floor(ph);
    double a = static_cast<double>(2 * std::numbers::pi_v<long double> * ph);
    s += c * cplx(std::cos(a), std::sin(a));
  }
  return s;
}

TrigPolynomial TrigPolynomial::operator+(const TrigPolynomial& o) const {
  std::vector<Term> t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(std::move(t));
}

TrigPolynomial TrigPolynomial::operator-(const TrigPolynomial& o) const {
  return *this + o.scaled(-1.0);
}

TrigPolynomial TrigPolynomial::scaled(cplx s) const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.second *= s;
  return from_terms(std::move(t));
}

TrigPolynomial TrigPolynomial::dilated(i64 k) const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.first = checked_mul(x.first, k);
  return from_terms(std::move(t));
}

TrigPolynomial TrigPolynomial::conj_reflect() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) {
    x.first = -x.first;
    x.second = std::conj(x.second);
  }
  return from_terms(std::move(t));
}

TrigPolynomial convolve(const TrigPolynomial& f, const TrigPolynomial& g) {
  std::vector<Term> out;
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      out.emplace_back(a[i].first, a[i].second * b[j].second);
      ++i;
      ++j;
    }
  }
  return TrigPolynomial::from_terms(std::move(out));
}

double max_coeff_diff(const TrigPolynomial& a, const TrigPolynomial& b) {
  double m = 0;
  const TrigPolynomial d = a - b;
  for (const auto& [n, c] : d.terms()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace sf
