#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perim/enumerate.hpp"
#include "perim/types.hpp"

namespace perim {

// Parameter grid for the verification drivers. Every check runs over
// d in [d_min, d_max], all a valid for it (or only fixed_a when set) and
// n in [1, n_max]; enumeration-backed comparisons stop at oracle_n_max.
struct GridSpec {
  int d_min = 1;
  int d_max = 10;
  std::optional<int> fixed_a;
  int n_max = 200;
  int oracle_n_max = 25;
};

// Throws std::domain_error on empty ranges or oracle_n_max beyond n_max or
// the enumeration cap.
void validate(const GridSpec& g, int enum_cap = kDefaultEnumCap);

struct CheckFailure {
  std::string params;    // "d=2 a=1 n=7"
  std::string relation;  // the identity or inequality that failed
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string check_name;
  long long cases_run = 0;
  std::vector<CheckFailure> failures;
  // Named counters a check wants to surface (e.g. how many inequality cases
  // were strict); order is meaningful for output.
  std::vector<std::pair<std::string, std::string>> stats;

  bool passed() const { return failures.empty(); }

  // Counts one case; on failure, materializes the detail record. detail is
  // only invoked when the case fails, so passing cases build no strings.
  template <class Detail>
  void record(bool ok, Detail&& detail) {
    ++cases_run;
    if (!ok) failures.push_back(detail());
  }
};

// Each check returns a full report rather than throwing on mathematical
// failure; domain errors (bad grids) still throw.

// h_total == f_total, cell-level h == f transport along the duality map, and
// both totals against the enumeration oracle for n <= oracle_n_max.
CheckReport check_duality(const GridSpec& g, int enum_cap = kDefaultEnumCap);

// h_total(d,a,n) <= l_total(d,a,n) for a < (d+3)/2, with stats on how often
// the inequality is strict vs. an equality.
CheckReport check_reverse_alder(const GridSpec& g);

// For d odd and a = (d+3)/2 (the degenerate single-class case):
// l == f_{d+2} == h_{d+2} three ways, plus h_d >= l_d.
CheckReport check_degenerate(const GridSpec& g);

// Five monotonicity statements: h_total falls when a or d grows and rises
// with n; l_total rises with n and falls when d grows.
CheckReport check_shifts(const GridSpec& g);

// Integer floor bounds tying the f-support arm index to the l-support arm
// counts: 0 <= floor(N/2) <= floor((n-a)/(d+3)) and
// 0 <= floor((N+1)/2) <= floor((n+a)/(d+3)) with N = floor((n-a)/(d+1)).
CheckReport check_floor_bounds(const GridSpec& g);

// The number of nonzero arms of the l refinement table equals
// floor((n-a)/(d+3)) + floor((n+a)/(d+3)) + 1 and also the sum of the arm
// counts of the f_{d+2} tables at residues a and d+3-a.
CheckReport check_arm_length_counts(const GridSpec& g);

// Every family against every independent route: closed form vs series
// (H, F) and vs the second cell-sum route (L) up to n_max, and vs the
// enumeration oracle up to oracle_n_max.
CheckReport cross_check(const GridSpec& g, int enum_cap = kDefaultEnumCap);

// Scan of the conjectured a-shift inequality l(d,a,n) <= l(d,a+1,n):
// exceptions lists every n <= n_max violating it (strictly decreasing counts),
// stable_from is the smallest N with no recorded exception at or beyond it.
// Throws std::domain_error when a or a+1 is a multiple of d+3, or both
// canonicalize to the same residue class (the comparison would be vacuous).
struct ScanReport {
  int d = 0;
  int a = 0;
  int n_max = 0;
  std::vector<int> exceptions;  // strictly increasing
  int stable_from = 1;
};

ScanReport scan_a_shift_conjecture(int d, int a, int n_max);

// Name-based dispatch for the CLI: duality, reverse_alder, degenerate,
// shifts, floor_bounds, arm_lengths, cross_check.
std::vector<std::string> check_names();
std::optional<CheckReport> run_check(const std::string& name, const GridSpec& g,
                                     int enum_cap = kDefaultEnumCap);

}  // namespace perim
