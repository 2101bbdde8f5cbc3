#pragma once

#include "perim/types.hpp"

namespace perim {

// C(top, bottom), with the guard that any index outside 0 <= bottom <= top
// yields 0. The guard is load-bearing: refinement formulas below rely on it
// to vanish exactly outside their support, so callers can sum over a plain
// index range without restating support bounds.
Count binomial(long long top, long long bottom);

}  // namespace perim
