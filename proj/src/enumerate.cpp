#include "perim/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace perim {

namespace {

int mod_pos(long long x, int m) {
  int r = static_cast<int>(x % m);
  return r < 0 ? r + m : r;
}

}  // namespace

PartConstraint PartConstraint::d_distinct_min(int d, int a) {
  if (d < 0) throw std::domain_error("d_distinct_min: gap must be >= 0");
  if (a < 1) throw std::domain_error("d_distinct_min: minimum part must be >= 1");
  PartConstraint c;
  c.kind = Kind::DDistinctMin;
  c.gap = d;
  c.min_part = a;
  return c;
}

PartConstraint PartConstraint::residue(int a, int m) {
  if (m < 1) throw std::domain_error("residue: modulus must be >= 1");
  PartConstraint c;
  c.kind = Kind::Residue;
  c.modulus = m;
  c.r1 = mod_pos(a, m);
  return c;
}

PartConstraint PartConstraint::pm_residue(int a, int m) {
  if (m < 1) throw std::domain_error("pm_residue: modulus must be >= 1");
  PartConstraint c;
  c.kind = Kind::PmResidue;
  c.modulus = m;
  c.r1 = mod_pos(a, m);
  int neg = mod_pos(-static_cast<long long>(a), m);
  c.r2 = neg == c.r1 ? -1 : neg;
  return c;
}

PartConstraint PartConstraint::two_residues(int a, int b, int m) {
  if (m < 1) throw std::domain_error("two_residues: modulus must be >= 1");
  PartConstraint c;
  c.kind = Kind::TwoResidues;
  c.modulus = m;
  c.r1 = mod_pos(a, m);
  int rb = mod_pos(b, m);
  c.r2 = rb == c.r1 ? -1 : rb;
  return c;
}

PartConstraint PartConstraint::any() { return d_distinct_min(0, 1); }

PartConstraint PartConstraint::for_family(Family f, int d, int a, int b) {
  switch (f) {
    case Family::H: return d_distinct_min(d, a);
    case Family::F: return residue(a, d + 1);
    case Family::L: return pm_residue(a, d + 3);
    case Family::LAB: return two_residues(a, b, d + 3);
  }
  throw std::domain_error("for_family: unknown family");
}

bool PartConstraint::admits(int part) const {
  if (part < 1) return false;
  if (kind == Kind::DDistinctMin) return part >= min_part;
  int r = part % modulus;
  return r == r1 || r == r2;
}

int PartConstraint::largest_admissible_leq(int x) const {
  if (kind == Kind::DDistinctMin) return x >= min_part ? x : 0;
  int best = 0;
  for (int r : {r1, r2}) {
    if (r < 0) continue;
    int v = x - mod_pos(x - r, modulus);  // largest v <= x with v == r (mod modulus)
    if (v >= 1) best = std::max(best, v);
  }
  return best;
}

namespace {

// Appends the remaining parts after a fixed prefix, largest-next-part-first,
// which together with the descending loops below yields lexicographically
// decreasing output overall.
void extend(const PartConstraint& c, int remaining, int max_next, std::vector<int>& parts,
            const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition{parts});
    return;
  }
  if (c.kind == PartConstraint::Kind::DDistinctMin) {
    // The last part must still clear min_part after the remaining gaps.
    long long lo = c.min_part + static_cast<long long>(c.gap) * (remaining - 1);
    for (int v = max_next; v >= lo; --v) {
      parts.push_back(v);
      extend(c, remaining - 1, v - c.gap, parts, visit);
      parts.pop_back();
    }
  } else {
    for (int v = c.largest_admissible_leq(max_next); v >= 1;
         v = c.largest_admissible_leq(v - 1)) {
      parts.push_back(v);
      extend(c, remaining - 1, v, parts, visit);
      parts.pop_back();
    }
  }
}

}  // namespace

void for_each_fixed_perimeter(int n, const PartConstraint& c,
                              const std::function<void(const Partition&)>& visit) {
  if (n < 1) return;
  std::vector<int> parts;
  // Perimeter n means lambda = n - alpha + 1 parts once the largest part
  // alpha is chosen, so the scan is one branch per admissible alpha.
  for (int alpha = n; alpha >= 1; --alpha) {
    int lambda = n - alpha + 1;
    if (c.kind == PartConstraint::Kind::DDistinctMin) {
      if (alpha < c.min_part + static_cast<long long>(c.gap) * (lambda - 1)) continue;
      parts.push_back(alpha);
      extend(c, lambda - 1, alpha - c.gap, parts, visit);
      parts.pop_back();
    } else {
      if (!c.admits(alpha)) continue;
      parts.push_back(alpha);
      extend(c, lambda - 1, alpha, parts, visit);
      parts.pop_back();
    }
  }
}

std::vector<Partition> enumerate_fixed_perimeter(int n, const PartConstraint& c) {
  std::vector<Partition> out;
  for_each_fixed_perimeter(n, c, [&](const Partition& p) { out.push_back(p); });
  return out;
}

namespace {

void check_cap(int n, int cap) {
  if (n > cap)
    throw std::domain_error("oracle: perimeter " + std::to_string(n) +
                            " exceeds enumeration cap " + std::to_string(cap));
}

Count count_all(const PartConstraint& c, int n, int cap) {
  check_cap(n, cap);
  Count total = 0;
  for_each_fixed_perimeter(n, c, [&](const Partition&) { ++total; });
  return total;
}

Count count_cell(const PartConstraint& c, int alpha, int lambda, int cap) {
  if (alpha < 1 || lambda < 1)
    throw std::domain_error("oracle: alpha and lambda must be >= 1");
  int n = alpha + lambda - 1;
  check_cap(n, cap);
  Count total = 0;
  for_each_fixed_perimeter(n, c, [&](const Partition& p) {
    if (p.arm() == alpha) ++total;
  });
  return total;
}

}  // namespace

Count oracle_count(Family f, int d, int a, int n, int cap) {
  if (f == Family::LAB)
    throw std::domain_error("oracle_count: family lab needs b; use oracle_count_ab");
  return count_all(PartConstraint::for_family(f, d, a), n, cap);
}

Count oracle_count_ab(int d, int a, int b, int n, int cap) {
  return count_all(PartConstraint::two_residues(a, b, d + 3), n, cap);
}

Count oracle_refined(Family f, int d, int a, int alpha, int lambda, int cap) {
  if (f == Family::LAB)
    throw std::domain_error("oracle_refined: family lab needs b; use oracle_refined_ab");
  return count_cell(PartConstraint::for_family(f, d, a), alpha, lambda, cap);
}

Count oracle_refined_ab(int d, int a, int b, int alpha, int lambda, int cap) {
  return count_cell(PartConstraint::two_residues(a, b, d + 3), alpha, lambda, cap);
}

}  // namespace perim
