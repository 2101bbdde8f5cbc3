#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace perim {

// Exact nonnegative partition count. Values outgrow 64 bits quickly
// (C(200,100) has 59 digits), so everything is arbitrary precision.
using Count = boost::multiprecision::cpp_int;

// The counting families, named by their part condition:
//   H   - parts are d-distinct and >= a
//   F   - parts are congruent to a (mod d+1)
//   L   - parts are congruent to +-a (mod d+3)
//   LAB - parts are congruent to a or b (mod d+3)
// All counts are taken at fixed perimeter (largest part + number of parts - 1).
enum class Family { H, F, L, LAB };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

// Parameter bundle for one counting query; b is only meaningful for LAB.
struct Params {
  int d = 1;
  int a = 1;
  std::optional<int> b;
  int n = 1;
};

}  // namespace perim
