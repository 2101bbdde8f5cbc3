#pragma once

#include <functional>
#include <vector>

#include "perim/partition.hpp"
#include "perim/types.hpp"

namespace perim {

// Admissible-part rule for fixed-perimeter enumeration. Factory functions
// resolve residues into [0, modulus) and drop a duplicate second residue, so
// equality of rules means equality of admitted part sets.
struct PartConstraint {
  enum class Kind { DDistinctMin, Residue, PmResidue, TwoResidues };

  Kind kind = Kind::DDistinctMin;
  int gap = 0;       // DDistinctMin: consecutive parts differ by at least gap
  int min_part = 1;  // DDistinctMin: smallest admissible part
  int modulus = 0;   // residue kinds
  int r1 = 0;        // resolved residue in [0, modulus)
  int r2 = -1;       // second resolved residue, -1 when absent

  static PartConstraint d_distinct_min(int d, int a);  // d = 0 allowed: plain partitions with parts >= a
  static PartConstraint residue(int a, int m);
  static PartConstraint pm_residue(int a, int m);
  static PartConstraint two_residues(int a, int b, int m);
  static PartConstraint any();  // every positive part admitted
  static PartConstraint for_family(Family f, int d, int a, int b = 0);

  bool admits(int part) const;
  // Largest admissible value <= x, or 0 if there is none.
  int largest_admissible_leq(int x) const;
};

// Enumeration is exponential in n (2^(n-1) partitions when unconstrained), so
// oracle queries refuse perimeters beyond this cap unless overridden.
inline constexpr int kDefaultEnumCap = 40;

// Visits every perimeter-n partition satisfying c, in lexicographically
// decreasing order of the part lists. No partition is visited twice.
void for_each_fixed_perimeter(int n, const PartConstraint& c,
                              const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_fixed_perimeter(int n, const PartConstraint& c);

// Brute-force counts by enumeration: the independent check for every closed
// form. Unlike the closed forms, these accept any positive a (and b).
// Throws std::domain_error when n exceeds cap, or oracle_count is called for
// LAB (which needs b). oracle_refined counts only partitions with the given
// largest part alpha and number of parts lambda, at perimeter alpha+lambda-1.
Count oracle_count(Family f, int d, int a, int n, int cap = kDefaultEnumCap);
Count oracle_count_ab(int d, int a, int b, int n, int cap = kDefaultEnumCap);
Count oracle_refined(Family f, int d, int a, int alpha, int lambda, int cap = kDefaultEnumCap);
Count oracle_refined_ab(int d, int a, int b, int alpha, int lambda, int cap = kDefaultEnumCap);

}  // namespace perim
