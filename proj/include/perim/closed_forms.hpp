#pragma once

#include <utility>
#include <vector>

#include "perim/binomial.hpp"
#include "perim/types.hpp"

namespace perim {

// Closed-form counts for partitions of fixed perimeter n = alpha + lambda - 1,
// where alpha is the largest part and lambda the number of parts. "Refined"
// functions fix the cell (alpha, lambda); "total" functions sum a perimeter's
// cells. All formulas are exact; every function either returns the count or
// throws std::domain_error naming the violated precondition.

// --- refined counts ---

// Partitions with lambda parts, largest part alpha, consecutive parts
// differing by >= d and smallest part >= a. Requires 1 <= a <= d+1.
// Equals C(alpha - a - (d-1)(lambda-1), lambda-1), which the binomial guard
// makes zero exactly off the support alpha >= a + d(lambda-1).
Count h_refined(int d, int a, int alpha, int lambda);

// Partitions with lambda parts, largest part alpha, every part congruent to
// a (mod d+1). Requires 1 <= a <= d+1. Zero unless alpha >= a and
// alpha == a (mod d+1); on support equals C((alpha-a)/(d+1) + lambda-1, lambda-1).
Count f_refined(int d, int a, int alpha, int lambda);

// Canonical representative of the residue pair {a, -a} mod (d+3): the unique
// r with 0 <= r <= (d+3)/2 generating the same pair. r = 0 means a is a
// multiple of d+3; the l functions treat that as a usage error rather than
// counting the class of multiples of d+3.
int l_canonical_residue(int d, int a);

// True when the classes +a and -a coincide mod d+3 (d odd, a == (d+3)/2).
bool l_degenerate(int d, int a);

// Partitions with lambda parts, largest part alpha, every part congruent to
// +-a (mod d+3). Zero unless alpha lies in one of the two classes. On support
// this is stars and bars over the admissible part values <= alpha: with s of
// them, C(s + lambda - 2, lambda - 1). Merging the classes keeps s right in
// the degenerate case where +a and -a coincide.
Count l_refined(int d, int a, int alpha, int lambda);

// --- totals at fixed perimeter n (0 whenever n is too small) ---

Count h_total(int d, int a, int n);
Count f_total(int d, int a, int n);

// f_total evaluated as separate even-k and odd-k binomial sums; same value,
// different route.
Count f_total_parity_split(int d, int a, int n);

// Parts congruent to +-a (mod d+3). Evaluated as the two-class binomial sum
//   sum_{k=0}^{floor((n-a)/(d+3))} C(n-a-kd-k,   n-a-kd-3k)
// + sum_{k=1}^{floor((n+a)/(d+3))} C(n+a-kd-k-1, n+a-kd-3k)
// after canonicalizing a; in the degenerate single-class case this reduces to
// counting parts congruent to a (mod d+3), i.e. f_total(d+2, a, n).
Count l_total(int d, int a, int n);

// Same value as l_total obtained by summing l_refined cells; kept as an
// independent route for cross-checking.
Count l_total_cell_sum(int d, int a, int n);

// Parts congruent to a or b (mod d+3), counted from the part-set definition
// (stars and bars per arm). This is the authoritative evaluation.
Count l_ab_total(int d, int a, int b, int n);

// Direct evaluation of the two-sum binomial expression
//   sum_{k=0}^{floor((n-a)/(d+3))} C(n-a-kd-k,   n-a-kd-3k)
// + sum_{k=1}^{floor((n-b)/(d+3))} C(n-b-kd-k-1, n-b-kd-3k)
// over canonicalized residues. Diagnostic only: for general (a, b) this does
// NOT equal l_ab_total (its second sum starts one arm short and mixes the
// class offsets), so it must never be used as the count. It is retained so
// the disagreement can be demonstrated and regression-tested.
Count l_ab_binomial_sum(int d, int a, int b, int n);

// --- duality between the H and F refinements ---

// Maps an h-support cell (alpha, lambda) to the f-support cell with the same
// perimeter and the same refined count:
//   alpha' = a + (d+1)(lambda-1),  lambda' = alpha - a - d(lambda-1) + 1.
// Throws if (alpha, lambda) is outside the h support.
std::pair<int, int> duality_map(int d, int a, int alpha, int lambda);

// Inverse direction, from f-support cells to h-support cells.
std::pair<int, int> duality_map_inverse(int d, int a, int alpha_prime, int lambda_prime);

// --- refinement tables ---

struct RefinementCell {
  int alpha = 0;
  int lambda = 0;
  Count count;

  bool operator==(const RefinementCell&) const = default;
};

// The nonzero cells of one family at one perimeter. H tables are ordered by
// lambda ascending (alpha descending), F, L and LAB tables by alpha ascending.
struct RefinementTable {
  Family family = Family::H;
  Params params;
  std::vector<RefinementCell> cells;

  Count total() const;
};

RefinementTable refinement_table(Family family, int d, int a, int n);  // H, F or L
RefinementTable refinement_table_ab(int d, int a, int b, int n);

}  // namespace perim
