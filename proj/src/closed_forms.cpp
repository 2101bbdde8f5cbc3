#include "perim/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace perim {

namespace {

void require_positive_da(const char* op, int d, int a) {
  if (d < 1) throw std::domain_error(std::string(op) + ": d must be >= 1");
  if (a < 1) throw std::domain_error(std::string(op) + ": a must be >= 1");
}

// The h/f closed forms are proved for 1 <= a <= d+1 only; beyond that the f
// form is genuinely wrong (residue classes acquire representatives below a),
// so both reject instead of extrapolating. The enumeration oracle covers
// larger a.
void require_hf_domain(const char* op, int d, int a) {
  require_positive_da(op, d, a);
  if (a > d + 1)
    throw std::domain_error(std::string(op) + ": a must be <= d+1 for the closed form");
}

void require_cell(const char* op, int alpha, int lambda) {
  if (alpha < 1) throw std::domain_error(std::string(op) + ": alpha must be >= 1");
  if (lambda < 1) throw std::domain_error(std::string(op) + ": lambda must be >= 1");
}

}  // namespace

Count h_refined(int d, int a, int alpha, int lambda) {
  require_hf_domain("h_refined", d, a);
  require_cell("h_refined", alpha, lambda);
  return binomial(static_cast<long long>(alpha) - a - static_cast<long long>(d - 1) * (lambda - 1),
                  lambda - 1);
}

Count f_refined(int d, int a, int alpha, int lambda) {
  require_hf_domain("f_refined", d, a);
  require_cell("f_refined", alpha, lambda);
  if (alpha < a || (alpha - a) % (d + 1) != 0) return 0;
  return binomial((alpha - a) / (d + 1) + static_cast<long long>(lambda) - 1, lambda - 1);
}

int l_canonical_residue(int d, int a) {
  require_positive_da("l_canonical_residue", d, a);
  int m = d + 3;
  int r = a % m;
  return std::min(r, m - r);
}

bool l_degenerate(int d, int a) {
  return 2 * l_canonical_residue(d, a) == d + 3;
}

namespace {

int require_l_residue(const char* op, int d, int a) {
  int r = l_canonical_residue(d, a);
  if (r == 0)
    throw std::domain_error(std::string(op) +
                            ": a must not be a multiple of d+3 (empty residue pair)");
  return r;
}

// Number of values in [1, x] congruent to r (mod m), for 1 <= r <= m.
long long class_values_up_to(int x, int r, int m) {
  return x >= r ? (x - r) / m + 1 : 0;
}

// Number of values in [1, x] congruent to +-r (mod m); one class only when
// 2r == m.
long long pm_values_up_to(int x, int r, int m) {
  long long s = class_values_up_to(x, r, m);
  if (2 * r != m) s += class_values_up_to(x, m - r, m);
  return s;
}

}  // namespace

Count l_refined(int d, int a, int alpha, int lambda) {
  require_cell("l_refined", alpha, lambda);
  int r = require_l_residue("l_refined", d, a);
  int m = d + 3;
  int res = alpha % m;
  if (res != r && res != m - r) return 0;
  // alpha itself is the largest part; the other lambda - 1 parts range over
  // the admissible values <= alpha with repetition (stars and bars).
  return binomial(pm_values_up_to(alpha, r, m) + lambda - 2, lambda - 1);
}

Count h_total(int d, int a, int n) {
  require_hf_domain("h_total", d, a);
  if (n < a) return 0;
  Count total = 0;
  int lambda_max = (n - a) / (d + 1) + 1;
  for (int lambda = 1; lambda <= lambda_max; ++lambda)
    total += h_refined(d, a, n - lambda + 1, lambda);
  return total;
}

Count f_total(int d, int a, int n) {
  require_hf_domain("f_total", d, a);
  if (n < a) return 0;
  Count total = 0;
  for (int alpha = a; alpha <= n; alpha += d + 1)
    total += f_refined(d, a, alpha, n - alpha + 1);
  return total;
}

Count f_total_parity_split(int d, int a, int n) {
  require_hf_domain("f_total_parity_split", d, a);
  if (n < a) return 0;
  long long base = n - a;
  long long arms = base / (d + 1);
  Count total = 0;
  for (long long k = 0; k <= arms / 2; ++k) {
    long long t = base - 2 * k * d;
    total += binomial(t, t - 2 * k);
  }
  for (long long k = 1; k <= (arms + 1) / 2; ++k) {
    long long t = base - (2 * k - 1) * d;
    total += binomial(t, t - (2 * k - 1));
  }
  return total;
}

Count l_total(int d, int a, int n) {
  int r = require_l_residue("l_total", d, a);
  if (n < r) return 0;
  int m = d + 3;
  if (2 * r == m) {
    // Degenerate: +r and -r are one class, i.e. parts congruent to r mod
    // (d+2)+1.
    return f_total(d + 2, r, n);
  }
  Count total = 0;
  for (long long k = 0; k <= (n - r) / m; ++k)
    total += binomial(n - r - k * d - k, n - r - k * d - 3 * k);
  for (long long k = 1; k <= (n + r) / m; ++k)
    total += binomial(n + r - k * d - k - 1, n + r - k * d - 3 * k);
  return total;
}

Count l_total_cell_sum(int d, int a, int n) {
  int r = require_l_residue("l_total_cell_sum", d, a);
  if (n < r) return 0;
  int m = d + 3;
  Count total = 0;
  for (int alpha = r; alpha <= n; alpha += m)
    total += l_refined(d, r, alpha, n - alpha + 1);
  if (2 * r != m)
    for (int alpha = m - r; alpha <= n; alpha += m)
      total += l_refined(d, r, alpha, n - alpha + 1);
  return total;
}

namespace {

int require_lab_residue(const char* op, int d, int value, const char* name) {
  if (value < 1)
    throw std::domain_error(std::string(op) + ": " + name + " must be >= 1");
  int r = value % (d + 3);
  if (r == 0)
    throw std::domain_error(std::string(op) + ": " + name +
                            " must not be a multiple of d+3 (empty residue class)");
  return r;
}

}  // namespace

Count l_ab_total(int d, int a, int b, int n) {
  return refinement_table_ab(d, a, b, n).total();
}

Count l_ab_binomial_sum(int d, int a, int b, int n) {
  if (d < 1) throw std::domain_error("l_ab_binomial_sum: d must be >= 1");
  int m = d + 3;
  int ra = require_lab_residue("l_ab_binomial_sum", d, a, "a");
  int rb = require_lab_residue("l_ab_binomial_sum", d, b, "b");
  Count total = 0;
  if (n >= ra)
    for (long long k = 0; k <= (n - ra) / m; ++k)
      total += binomial(n - ra - k * d - k, n - ra - k * d - 3 * k);
  if (n >= rb)
    for (long long k = 1; k <= (n - rb) / m; ++k)
      total += binomial(n - rb - k * d - k - 1, n - rb - k * d - 3 * k);
  return total;
}

std::pair<int, int> duality_map(int d, int a, int alpha, int lambda) {
  require_hf_domain("duality_map", d, a);
  require_cell("duality_map", alpha, lambda);
  if (static_cast<long long>(alpha) < a + static_cast<long long>(d) * (lambda - 1))
    throw std::domain_error("duality_map: (alpha, lambda) is outside the h support");
  int alpha_prime = a + (d + 1) * (lambda - 1);
  int lambda_prime = alpha - a - d * (lambda - 1) + 1;
  return {alpha_prime, lambda_prime};
}

std::pair<int, int> duality_map_inverse(int d, int a, int alpha_prime, int lambda_prime) {
  require_hf_domain("duality_map_inverse", d, a);
  require_cell("duality_map_inverse", alpha_prime, lambda_prime);
  if (alpha_prime < a || (alpha_prime - a) % (d + 1) != 0)
    throw std::domain_error("duality_map_inverse: alpha' is outside the f support");
  int lambda = (alpha_prime - a) / (d + 1) + 1;
  int alpha = a + d * (lambda - 1) + lambda_prime - 1;
  return {alpha, lambda};
}

Count RefinementTable::total() const {
  Count t = 0;
  for (const auto& cell : cells) t += cell.count;
  return t;
}

RefinementTable refinement_table(Family family, int d, int a, int n) {
  RefinementTable table;
  table.family = family;
  table.params = Params{d, a, std::nullopt, n};
  switch (family) {
    case Family::H: {
      require_hf_domain("refinement_table", d, a);
      if (n < a) break;
      int lambda_max = (n - a) / (d + 1) + 1;
      for (int lambda = 1; lambda <= lambda_max; ++lambda) {
        int alpha = n - lambda + 1;
        table.cells.push_back({alpha, lambda, h_refined(d, a, alpha, lambda)});
      }
      break;
    }
    case Family::F: {
      require_hf_domain("refinement_table", d, a);
      if (n < a) break;
      for (int alpha = a; alpha <= n; alpha += d + 1)
        table.cells.push_back({alpha, n - alpha + 1, f_refined(d, a, alpha, n - alpha + 1)});
      break;
    }
    case Family::L: {
      int r = require_l_residue("refinement_table", d, a);
      int m = d + 3;
      for (int alpha = 1; alpha <= n; ++alpha) {
        int res = alpha % m;
        if (res != r && res != m - r) continue;
        table.cells.push_back({alpha, n - alpha + 1, l_refined(d, r, alpha, n - alpha + 1)});
      }
      break;
    }
    case Family::LAB:
      throw std::domain_error("refinement_table: family lab needs b; use refinement_table_ab");
  }
  return table;
}

RefinementTable refinement_table_ab(int d, int a, int b, int n) {
  if (d < 1) throw std::domain_error("refinement_table_ab: d must be >= 1");
  int m = d + 3;
  int ra = require_lab_residue("refinement_table_ab", d, a, "a");
  int rb = require_lab_residue("refinement_table_ab", d, b, "b");
  RefinementTable table;
  table.family = Family::LAB;
  table.params = Params{d, a, b, n};
  for (int alpha = 1; alpha <= n; ++alpha) {
    int res = alpha % m;
    if (res != ra && res != rb) continue;
    long long s = class_values_up_to(alpha, ra, m);
    if (rb != ra) s += class_values_up_to(alpha, rb, m);
    int lambda = n - alpha + 1;
    table.cells.push_back({alpha, lambda, binomial(s + lambda - 2, lambda - 1)});
  }
  return table;
}

}  // namespace perim
