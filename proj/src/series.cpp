#include "perim/series.hpp"

#include <stdexcept>
#include <string>

namespace perim {

TruncatedBivariateSeries::TruncatedBivariateSeries(int cap) : cap_(cap) {
  if (cap < 1) throw std::domain_error("bivariate series: cap must be >= 1");
  coeff_.assign(static_cast<std::size_t>(cap + 1) * (cap + 1), Count(0));
}

std::size_t TruncatedBivariateSeries::index(int alpha, int lambda) const {
  return static_cast<std::size_t>(alpha) * (cap_ + 1) + lambda;
}

Count TruncatedBivariateSeries::coefficient(int alpha, int lambda) const {
  if (static_cast<long long>(alpha) + lambda - 1 > cap_)
    throw std::out_of_range("bivariate series: (alpha, lambda) lies beyond the truncation cap " +
                            std::to_string(cap_));
  if (alpha < 1 || lambda < 1) return 0;
  return coeff_[index(alpha, lambda)];
}

Count TruncatedBivariateSeries::perimeter_sum(int n) const {
  if (n > cap_)
    throw std::out_of_range("bivariate series: perimeter beyond the truncation cap " +
                            std::to_string(cap_));
  Count total = 0;
  for (int alpha = 1; alpha <= n; ++alpha) total += coeff_[index(alpha, n - alpha + 1)];
  return total;
}

void TruncatedBivariateSeries::add(int alpha, int lambda, int q_exp, const Count& value) {
  if (static_cast<long long>(alpha) + lambda - 1 != q_exp)
    throw std::logic_error("bivariate series: term x^" + std::to_string(alpha) + " y^" +
                           std::to_string(lambda) + " q^" + std::to_string(q_exp) +
                           " violates the perimeter grading q = alpha + lambda - 1");
  if (alpha < 1 || lambda < 1 || q_exp > cap_)
    throw std::out_of_range("bivariate series: add outside the stored triangle");
  coeff_[index(alpha, lambda)] += value;
}

TruncatedUnivariateSeries::TruncatedUnivariateSeries(int cap) : cap_(cap) {
  if (cap < 1) throw std::domain_error("univariate series: cap must be >= 1");
  coeff_.assign(static_cast<std::size_t>(cap) + 1, Count(0));
}

Count TruncatedUnivariateSeries::coefficient(int n) const {
  if (n > cap_)
    throw std::out_of_range("univariate series: index beyond the truncation cap " +
                            std::to_string(cap_));
  if (n < 1) return 0;
  return coeff_[static_cast<std::size_t>(n)];
}

Count& TruncatedUnivariateSeries::slot(int n) {
  if (n < 1 || n > cap_)
    throw std::out_of_range("univariate series: slot outside [1, cap]");
  return coeff_[static_cast<std::size_t>(n)];
}

namespace {

void require_expansion_args(const char* op, int a, int cap) {
  if (a < 1) throw std::domain_error(std::string(op) + ": a must be >= 1");
  if (cap < a) throw std::domain_error(std::string(op) + ": cap must be >= a");
}

}  // namespace

// Both bivariate kernels satisfy S = numerator + S * (step1 + step2), so the
// coefficients at perimeter p depend only on perimeters p - dq of the steps.
// One ascending pass over perimeter levels therefore computes the whole
// triangle, with every produced term routed through add() and its grading
// check: the q-exponent argument is source grade + step degree, not
// recomputed from (alpha, lambda).

TruncatedBivariateSeries expand_h(int d, int a, int cap) {
  if (d < 1) throw std::domain_error("expand_h: d must be >= 1");
  require_expansion_args("expand_h", a, cap);
  TruncatedBivariateSeries s(cap);
  s.add(a, 1, a, 1);  // numerator x^a y q^a
  for (int p = a + 1; p <= cap; ++p) {
    for (int alpha = 1; alpha <= p; ++alpha) {
      int lambda = p - alpha + 1;
      // step x q: from (alpha-1, lambda), grade p-1
      Count c = s.coefficient(alpha - 1, lambda);
      if (c != 0) s.add(alpha, lambda, (alpha - 1) + lambda - 1 + 1, c);
      // step x^d y q^(d+1): from (alpha-d, lambda-1), grade p-d-1
      c = s.coefficient(alpha - d, lambda - 1);
      if (c != 0) s.add(alpha, lambda, (alpha - d) + (lambda - 1) - 1 + (d + 1), c);
    }
  }
  return s;
}

TruncatedBivariateSeries expand_f(int d, int a, int cap) {
  if (d < 1) throw std::domain_error("expand_f: d must be >= 1");
  require_expansion_args("expand_f", a, cap);
  TruncatedBivariateSeries s(cap);
  s.add(a, 1, a, 1);
  for (int p = a + 1; p <= cap; ++p) {
    for (int alpha = 1; alpha <= p; ++alpha) {
      int lambda = p - alpha + 1;
      // step y q: from (alpha, lambda-1), grade p-1
      Count c = s.coefficient(alpha, lambda - 1);
      if (c != 0) s.add(alpha, lambda, alpha + (lambda - 1) - 1 + 1, c);
      // step x^(d+1) q^(d+1): from (alpha-d-1, lambda), grade p-d-1
      c = s.coefficient(alpha - d - 1, lambda);
      if (c != 0) s.add(alpha, lambda, (alpha - d - 1) + lambda - 1 + (d + 1), c);
    }
  }
  return s;
}

TruncatedUnivariateSeries expand_univariate_two_step(int a, int s1, int s2, int cap) {
  require_expansion_args("expand_univariate_two_step", a, cap);
  if (s1 < 1 || s2 < 1)
    throw std::domain_error("expand_univariate_two_step: step sizes must be >= 1");
  TruncatedUnivariateSeries s(cap);
  s.slot(a) = 1;
  for (int n = a + 1; n <= cap; ++n) {
    Count c = 0;
    if (n - s1 >= 1) c += s.coefficient(n - s1);
    if (n - s2 >= 1) c += s.coefficient(n - s2);
    if (c != 0) s.slot(n) = c;
  }
  return s;
}

TruncatedUnivariateSeries expand_h_univariate(int d, int a, int cap) {
  if (d < 1) throw std::domain_error("expand_h_univariate: d must be >= 1");
  return expand_univariate_two_step(a, 1, d + 1, cap);
}

}  // namespace perim
