#include "perim/binomial.hpp"

namespace perim {

Count binomial(long long top, long long bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0;
  if (bottom > top - bottom) bottom = top - bottom;
  Count result = 1;
  for (long long i = 1; i <= bottom; ++i) {
    result *= top - bottom + i;
    result /= i;  // exact: result is C(top - bottom + i, i) at this point
  }
  return result;
}

}  // namespace perim
