#include "perim/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "perim/closed_forms.hpp"
#include "perim/series.hpp"

namespace perim {

void validate(const GridSpec& g, int enum_cap) {
  if (g.d_min < 1) throw std::domain_error("grid: d_min must be >= 1");
  if (g.d_max < g.d_min) throw std::domain_error("grid: d range is empty");
  if (g.n_max < 1) throw std::domain_error("grid: n_max must be >= 1");
  if (g.fixed_a && *g.fixed_a < 1) throw std::domain_error("grid: a must be >= 1");
  if (g.oracle_n_max < 0) throw std::domain_error("grid: oracle_n_max must be >= 0");
  if (g.oracle_n_max > g.n_max)
    throw std::domain_error("grid: oracle_n_max must not exceed n_max");
  if (g.oracle_n_max > enum_cap)
    throw std::domain_error("grid: oracle_n_max exceeds the enumeration cap");
}

namespace {

std::string dan(int d, int a, int n) {
  return "d=" + std::to_string(d) + " a=" + std::to_string(a) + " n=" + std::to_string(n);
}

CheckFailure fail(std::string params, std::string relation, const Count& lhs, const Count& rhs) {
  return {std::move(params), std::move(relation), lhs.str(), rhs.str()};
}

CheckFailure fail_ll(std::string params, std::string relation, long long lhs, long long rhs) {
  return {std::move(params), std::move(relation), std::to_string(lhs), std::to_string(rhs)};
}

// The a values a check visits for one d: either 1..a_max or the pinned value
// when the grid fixes a (empty if the pinned value is out of range).
std::vector<int> a_range(const GridSpec& g, int a_max) {
  std::vector<int> v;
  if (g.fixed_a) {
    if (*g.fixed_a <= a_max) v.push_back(*g.fixed_a);
    return v;
  }
  for (int a = 1; a <= a_max; ++a) v.push_back(a);
  return v;
}

// Largest a with a < (d+3)/2, the domain of the one-parameter l statements.
int nondegenerate_a_max(int d) { return (d + 2) / 2; }

long long floor_div(long long x, long long y) {
  long long q = x / y;
  return (x % y != 0 && (x < 0) != (y < 0)) ? q - 1 : q;
}

// Memoized rows n -> total(d, a, n) for n in [0, n_hi]; the monotonicity
// check reuses each row up to three times.
class TotalRows {
 public:
  explicit TotalRows(int n_hi) : n_hi_(n_hi) {}

  const std::vector<Count>& h(int d, int a) {
    auto [it, fresh] = h_.try_emplace({d, a});
    if (fresh) it->second = build(&h_total, d, a);
    return it->second;
  }

  const std::vector<Count>& l(int d, int a) {
    auto [it, fresh] = l_.try_emplace({d, a});
    if (fresh) it->second = build(&l_total, d, a);
    return it->second;
  }

 private:
  std::vector<Count> build(Count (*total)(int, int, int), int d, int a) {
    std::vector<Count> row(static_cast<std::size_t>(n_hi_) + 1);
    for (int n = 1; n <= n_hi_; ++n) row[static_cast<std::size_t>(n)] = total(d, a, n);
    return row;
  }

  int n_hi_;
  std::map<std::pair<int, int>, std::vector<Count>> h_, l_;
};

}  // namespace

CheckReport check_duality(const GridSpec& g, int enum_cap) {
  validate(g, enum_cap);
  CheckReport r;
  r.check_name = "duality";
  for (int d = g.d_min; d <= g.d_max; ++d) {
    for (int a : a_range(g, d + 1)) {
      for (int n = 1; n <= g.n_max; ++n) {
        Count h = h_total(d, a, n);
        Count f = f_total(d, a, n);
        r.record(h == f, [&] { return fail(dan(d, a, n), "h_total == f_total", h, f); });
        for (const auto& cell : refinement_table(Family::H, d, a, n).cells) {
          auto [ap, lp] = duality_map(d, a, cell.alpha, cell.lambda);
          Count fr = f_refined(d, a, ap, lp);
          r.record(fr == cell.count, [&] {
            return fail(dan(d, a, n) + " alpha=" + std::to_string(cell.alpha) +
                            " lambda=" + std::to_string(cell.lambda),
                        "h cell == f cell at the dual index", cell.count, fr);
          });
        }
        if (n <= g.oracle_n_max) {
          Count oh = oracle_count(Family::H, d, a, n, enum_cap);
          r.record(h == oh, [&] { return fail(dan(d, a, n), "h_total == oracle", h, oh); });
          Count of = oracle_count(Family::F, d, a, n, enum_cap);
          r.record(f == of, [&] { return fail(dan(d, a, n), "f_total == oracle", f, of); });
        }
      }
    }
  }
  return r;
}

CheckReport check_reverse_alder(const GridSpec& g) {
  validate(g);
  CheckReport r;
  r.check_name = "reverse_alder";
  long long strict = 0;
  long long equal = 0;
  for (int d = g.d_min; d <= g.d_max; ++d) {
    for (int a : a_range(g, nondegenerate_a_max(d))) {
      for (int n = 1; n <= g.n_max; ++n) {
        Count h = h_total(d, a, n);
        Count l = l_total(d, a, n);
        r.record(h <= l, [&] { return fail(dan(d, a, n), "h_total <= l_total", h, l); });
        if (h < l)
          ++strict;
        else if (h == l)
          ++equal;
      }
    }
  }
  r.stats.emplace_back("strict", std::to_string(strict));
  r.stats.emplace_back("equal", std::to_string(equal));
  return r;
}

CheckReport check_degenerate(const GridSpec& g) {
  validate(g);
  CheckReport r;
  r.check_name = "degenerate";
  for (int d = g.d_min; d <= g.d_max; ++d) {
    if (d % 2 == 0) continue;
    int a = (d + 3) / 2;
    if (g.fixed_a && *g.fixed_a != a) continue;
    for (int n = 1; n <= g.n_max; ++n) {
      Count l_cells = l_total_cell_sum(d, a, n);
      Count l_bin = l_total(d, a, n);
      Count f2 = f_total(d + 2, a, n);
      Count h2 = h_total(d + 2, a, n);
      Count hd = h_total(d, a, n);
      r.record(l_bin == l_cells,
               [&] { return fail(dan(d, a, n), "l_total == l_total_cell_sum", l_bin, l_cells); });
      r.record(l_cells == f2,
               [&] { return fail(dan(d, a, n), "l(d,a) == f(d+2,a)", l_cells, f2); });
      r.record(f2 == h2, [&] { return fail(dan(d, a, n), "f(d+2,a) == h(d+2,a)", f2, h2); });
      r.record(hd >= l_cells,
               [&] { return fail(dan(d, a, n), "h(d,a) >= l(d,a)", hd, l_cells); });
    }
  }
  return r;
}

CheckReport check_shifts(const GridSpec& g) {
  validate(g);
  CheckReport r;
  r.check_name = "shifts";
  TotalRows rows(g.n_max + 1);
  for (int d = g.d_min; d <= g.d_max; ++d) {
    for (int a : a_range(g, d + 1)) {
      const auto& h0 = rows.h(d, a);
      if (a + 1 <= d + 1) {
        const auto& ha = rows.h(d, a + 1);
        for (int n = 1; n <= g.n_max; ++n)
          r.record(ha[n] <= h0[n],
                   [&] { return fail(dan(d, a, n), "h(d,a+1,n) <= h(d,a,n)", ha[n], h0[n]); });
      }
      const auto& hd = rows.h(d + 1, a);
      for (int n = 1; n <= g.n_max; ++n)
        r.record(hd[n] <= h0[n],
                 [&] { return fail(dan(d, a, n), "h(d+1,a,n) <= h(d,a,n)", hd[n], h0[n]); });
      for (int n = 1; n <= g.n_max; ++n)
        r.record(h0[n] <= h0[n + 1],
                 [&] { return fail(dan(d, a, n), "h(d,a,n) <= h(d,a,n+1)", h0[n], h0[n + 1]); });
    }
    for (int a : a_range(g, nondegenerate_a_max(d))) {
      const auto& l0 = rows.l(d, a);
      const auto& ld = rows.l(d + 1, a);
      for (int n = 1; n <= g.n_max; ++n)
        r.record(l0[n] <= l0[n + 1],
                 [&] { return fail(dan(d, a, n), "l(d,a,n) <= l(d,a,n+1)", l0[n], l0[n + 1]); });
      for (int n = 1; n <= g.n_max; ++n)
        r.record(ld[n] <= l0[n],
                 [&] { return fail(dan(d, a, n), "l(d+1,a,n) <= l(d,a,n)", ld[n], l0[n]); });
    }
  }
  return r;
}

CheckReport check_floor_bounds(const GridSpec& g) {
  validate(g);
  CheckReport r;
  r.check_name = "floor_bounds";
  for (int d = g.d_min; d <= g.d_max; ++d) {
    for (int a : a_range(g, nondegenerate_a_max(d))) {
      for (int n = a; n <= g.n_max; ++n) {
        long long arms = (n - a) / (d + 1);
        long long lo = arms / 2;
        long long hi = (arms + 1) / 2;
        r.record(0 <= lo && lo <= (n - a) / (d + 3), [&] {
          return fail_ll(dan(d, a, n), "0 <= floor(N/2) <= floor((n-a)/(d+3))", lo,
                         (n - a) / (d + 3));
        });
        r.record(0 <= hi && hi <= (n + a) / (d + 3), [&] {
          return fail_ll(dan(d, a, n), "0 <= floor((N+1)/2) <= floor((n+a)/(d+3))", hi,
                         (n + a) / (d + 3));
        });
      }
    }
  }
  return r;
}

CheckReport check_arm_length_counts(const GridSpec& g) {
  validate(g);
  CheckReport r;
  r.check_name = "arm_lengths";
  for (int d = g.d_min; d <= g.d_max; ++d) {
    int m = d + 3;
    for (int a : a_range(g, nondegenerate_a_max(d))) {
      for (int n = 1; n <= g.n_max; ++n) {
        long long arms =
            static_cast<long long>(refinement_table(Family::L, d, a, n).cells.size());
        long long expect = floor_div(n - a, m) + floor_div(n + a, m) + 1;
        r.record(arms == expect, [&] {
          return fail_ll(dan(d, a, n), "l arm count == floor((n-a)/(d+3))+floor((n+a)/(d+3))+1",
                         arms, expect);
        });
        long long f_arms =
            static_cast<long long>(refinement_table(Family::F, d + 2, a, n).cells.size()) +
            static_cast<long long>(refinement_table(Family::F, d + 2, m - a, n).cells.size());
        r.record(arms == f_arms, [&] {
          return fail_ll(dan(d, a, n), "l arm count == f(d+2,a) arms + f(d+2,d+3-a) arms", arms,
                         f_arms);
        });
      }
    }
  }
  return r;
}

CheckReport cross_check(const GridSpec& g, int enum_cap) {
  validate(g, enum_cap);
  CheckReport r;
  r.check_name = "cross_check";
  for (int d = g.d_min; d <= g.d_max; ++d) {
    for (int a : a_range(g, d + 1)) {
      // cap at least a so the expansions are well-formed even when the grid
      // stops below the first nonzero coefficient
      int cap = std::max(a, g.n_max);
      auto hs = expand_h_univariate(d, a, cap);
      auto fs = expand_f(d, a, cap);
      for (int n = 1; n <= g.n_max; ++n) {
        Count hc = h_total(d, a, n);
        Count hq = hs.coefficient(n);
        r.record(hc == hq, [&] { return fail(dan(d, a, n), "h_total == h series", hc, hq); });
        Count fc = f_total(d, a, n);
        Count fq = fs.perimeter_sum(n);
        r.record(fc == fq,
                 [&] { return fail(dan(d, a, n), "f_total == f series collapse", fc, fq); });
        if (n <= g.oracle_n_max) {
          Count oh = oracle_count(Family::H, d, a, n, enum_cap);
          r.record(hc == oh, [&] { return fail(dan(d, a, n), "h_total == oracle", hc, oh); });
          Count of = oracle_count(Family::F, d, a, n, enum_cap);
          r.record(fc == of, [&] { return fail(dan(d, a, n), "f_total == oracle", fc, of); });
        }
      }
    }
    // includes the degenerate a = (d+3)/2 for odd d
    for (int a : a_range(g, (d + 3) / 2)) {
      for (int n = 1; n <= g.n_max; ++n) {
        Count lc = l_total(d, a, n);
        Count ls = l_total_cell_sum(d, a, n);
        r.record(lc == ls,
                 [&] { return fail(dan(d, a, n), "l_total == l_total_cell_sum", lc, ls); });
        if (n <= g.oracle_n_max) {
          Count ol = oracle_count(Family::L, d, a, n, enum_cap);
          r.record(lc == ol, [&] { return fail(dan(d, a, n), "l_total == oracle", lc, ol); });
        }
      }
    }
  }
  return r;
}

ScanReport scan_a_shift_conjecture(int d, int a, int n_max) {
  if (d < 1) throw std::domain_error("scan: d must be >= 1");
  if (a < 1) throw std::domain_error("scan: a must be >= 1");
  int ra = l_canonical_residue(d, a);
  int rb = l_canonical_residue(d, a + 1);
  if (ra == 0 || rb == 0)
    throw std::domain_error("scan: neither a nor a+1 may be a multiple of d+3");
  if (ra == rb)
    throw std::domain_error("scan: a and a+1 fall in the same residue pair mod d+3");
  ScanReport rep;
  rep.d = d;
  rep.a = a;
  rep.n_max = n_max;
  for (int n = 1; n <= n_max; ++n)
    if (l_total(d, a, n) > l_total(d, a + 1, n)) rep.exceptions.push_back(n);
  rep.stable_from = rep.exceptions.empty() ? 1 : rep.exceptions.back() + 1;
  return rep;
}

std::vector<std::string> check_names() {
  return {"duality",      "reverse_alder", "degenerate", "shifts",
          "floor_bounds", "arm_lengths",   "cross_check"};
}

std::optional<CheckReport> run_check(const std::string& name, const GridSpec& g, int enum_cap) {
  if (name == "duality") return check_duality(g, enum_cap);
  if (name == "reverse_alder") return check_reverse_alder(g);
  if (name == "degenerate") return check_degenerate(g);
  if (name == "shifts") return check_shifts(g);
  if (name == "floor_bounds") return check_floor_bounds(g);
  if (name == "arm_lengths") return check_arm_length_counts(g);
  if (name == "cross_check") return cross_check(g, enum_cap);
  return std::nullopt;
}

}  // namespace perim
