#pragma once

#include <vector>

#include "perim/types.hpp"

namespace perim {

// Truncated power series whose terms x^alpha y^lambda q^g are graded by
// perimeter: every stored term must satisfy g = alpha + lambda - 1. The
// grading is enforced at the single mutation point (add), which throws
// std::logic_error on violation; series built only through add are graded by
// construction, so expansion bugs surface immediately instead of as silently
// renormalized coefficients.
class TruncatedBivariateSeries {
 public:
  // Holds all coefficients with alpha + lambda - 1 <= cap; cap >= 1.
  explicit TruncatedBivariateSeries(int cap);

  int cap() const { return cap_; }

  // Coefficient of x^alpha y^lambda. Returns 0 for index pairs inside the
  // truncation with no term; throws std::out_of_range once alpha + lambda - 1
  // exceeds cap, because there the value is unknown, not zero.
  Count coefficient(int alpha, int lambda) const;

  // Sum of all coefficients at perimeter n: the x = y = 1 specialization of
  // the q^n slice. Throws std::out_of_range when n > cap.
  Count perimeter_sum(int n) const;

  // Adds value to the (alpha, lambda) coefficient of a term carried with the
  // explicit q-exponent q_exp. Throws std::logic_error if
  // q_exp != alpha + lambda - 1, std::out_of_range beyond the truncation.
  void add(int alpha, int lambda, int q_exp, const Count& value);

 private:
  std::size_t index(int alpha, int lambda) const;

  int cap_;
  std::vector<Count> coeff_;  // dense (cap+1) x (cap+1) grid
};

class TruncatedUnivariateSeries {
 public:
  explicit TruncatedUnivariateSeries(int cap);

  int cap() const { return cap_; }

  // Coefficient of q^n; 0 for n < 1, throws std::out_of_range for n > cap.
  Count coefficient(int n) const;

  Count& slot(int n);  // mutable access for builders, same bounds rules

 private:
  int cap_;
  std::vector<Count> coeff_;
};

// Expansion of x^a y q^a / (1 - (x q + x^d y q^(d+1))) to perimeter <= cap.
// The (alpha, lambda) coefficient counts partitions with largest part alpha,
// lambda parts, d-distinct parts >= a, i.e. matches h_refined(d, a, ., .).
TruncatedBivariateSeries expand_h(int d, int a, int cap);

// Expansion of x^a y q^a / (1 - (y q + x^(d+1) q^(d+1))); coefficients match
// f_refined(d, a, ., .).
TruncatedBivariateSeries expand_f(int d, int a, int cap);

// Expansion of q^a / (1 - (q^s1 + q^s2)), the shared kernel of the univariate
// perimeter series. Coefficients obey c(n) = [n == a] + c(n - s1) + c(n - s2).
TruncatedUnivariateSeries expand_univariate_two_step(int a, int s1, int s2, int cap);

// Univariate perimeter series of the H family: q^a / (1 - (q + q^(d+1))),
// the x = y = 1 collapse of expand_h. Coefficient of q^n is h_total(d, a, n)
// for a <= d+1. Note the second step is q^(d+1), not q^d: the d-distinct step
// raises the perimeter by d+1 (largest part by d, part count by 1). The q^d
// variant is available through expand_univariate_two_step(a, 1, d, cap) and
// diverges from the counts already at d = 1, n = 2.
TruncatedUnivariateSeries expand_h_univariate(int d, int a, int cap);

}  // namespace perim
