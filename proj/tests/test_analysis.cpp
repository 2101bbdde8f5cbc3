#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "perim/analysis.hpp"
#include "perim/closed_forms.hpp"

using namespace perim;

namespace {

void expect_clean(const CheckReport& r, long long min_cases) {
  INFO(r.check_name);
  for (const auto& f : r.failures) {
    INFO(f.params, ": ", f.relation, " lhs=", f.lhs, " rhs=", f.rhs);
  }
  CHECK(r.passed());
  CHECK(r.cases_run >= min_cases);
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_NOTHROW(validate(GridSpec{}));
  CHECK_THROWS_AS(validate(GridSpec{3, 2, std::nullopt, 10, 5}), std::domain_error);
  CHECK_THROWS_AS(validate(GridSpec{0, 2, std::nullopt, 10, 5}), std::domain_error);
  CHECK_THROWS_AS(validate(GridSpec{1, 2, std::nullopt, 10, 11}), std::domain_error);
  CHECK_THROWS_AS(validate(GridSpec{1, 2, std::nullopt, 100, 50}), std::domain_error);
  CHECK_NOTHROW(validate(GridSpec{1, 2, std::nullopt, 100, 50}, 60));
  CHECK_THROWS_AS(validate(GridSpec{1, 2, 0, 10, 5}), std::domain_error);
  CHECK_THROWS_AS(validate(GridSpec{1, 2, std::nullopt, 0, 0}), std::domain_error);
}

TEST_CASE("record materializes details only on failure") {
  CheckReport r;
  r.check_name = "demo";
  int built = 0;
  r.record(true, [&] {
    ++built;
    return CheckFailure{"d=1", "x == y", "1", "1"};
  });
  r.record(false, [&] {
    ++built;
    return CheckFailure{"d=1 a=1 n=3", "x == y", "1", "2"};
  });
  CHECK(r.cases_run == 2);
  CHECK(built == 1);
  CHECK_FALSE(r.passed());
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].params == "d=1 a=1 n=3");
  CHECK(r.failures[0].rhs == "2");
}

TEST_CASE("duality check passes") {
  auto r = check_duality(GridSpec{1, 4, std::nullopt, 60, 14});
  expect_clean(r, 1000);
}

TEST_CASE("reverse inequality check passes and reports strictness stats") {
  auto r = check_reverse_alder(GridSpec{1, 4, std::nullopt, 60, 0});
  expect_clean(r, 100);
  long long strict = -1, equal = -1;
  for (const auto& [k, v] : r.stats) {
    if (k == "strict") strict = std::stoll(v);
    if (k == "equal") equal = std::stoll(v);
  }
  CHECK(strict > 0);
  CHECK(equal >= 0);
  CHECK(strict + equal == r.cases_run);
}

TEST_CASE("degenerate-class check passes") {
  expect_clean(check_degenerate(GridSpec{1, 9, std::nullopt, 80, 0}), 100);
}

TEST_CASE("shift monotonicity check passes") {
  expect_clean(check_shifts(GridSpec{1, 4, std::nullopt, 60, 0}), 500);
}

TEST_CASE("floor bound check passes on a wide grid") {
  expect_clean(check_floor_bounds(GridSpec{1, 20, std::nullopt, 200, 0}), 5000);
}

TEST_CASE("arm count check passes") {
  expect_clean(check_arm_length_counts(GridSpec{1, 5, std::nullopt, 80, 0}), 500);
}

TEST_CASE("cross check passes with the oracle engaged") {
  expect_clean(cross_check(GridSpec{1, 3, std::nullopt, 30, 12}), 500);
}

TEST_CASE("cross check survives grids whose n_max is below a") {
  expect_clean(cross_check(GridSpec{10, 10, std::nullopt, 2, 2}), 1);
}

TEST_CASE("run_check dispatches every published name") {
  GridSpec g{1, 2, std::nullopt, 20, 8};
  auto names = check_names();
  CHECK(names.size() == 7);
  for (const auto& name : names) {
    auto r = run_check(name, g);
    REQUIRE(r.has_value());
    CHECK(r->check_name == name);
    CHECK(r->passed());
  }
  CHECK_FALSE(run_check("no_such_check", g).has_value());
}

TEST_CASE("a-shift scan: frozen results for d = 2, a = 1") {
  auto r = scan_a_shift_conjecture(2, 1, 50);
  CHECK(r.d == 2);
  CHECK(r.a == 1);
  CHECK(r.n_max == 50);
  CHECK(r.exceptions == std::vector<int>{1, 7, 8});
  CHECK(r.stable_from == 9);
}

TEST_CASE("a-shift scan: frozen results for d = 6, a = 2") {
  auto r = scan_a_shift_conjecture(6, 2, 200);
  REQUIRE(r.exceptions.size() == 9);
  CHECK(r.exceptions.front() == 2);
  CHECK(r.exceptions.back() == 28);
  CHECK(r.stable_from == 29);
}

TEST_CASE("a-shift scan results are self-consistent") {
  for (auto [d, a] : std::vector<std::pair<int, int>>{{2, 1}, {4, 2}, {5, 2}, {10, 3}}) {
    auto r = scan_a_shift_conjecture(d, a, 120);
    std::size_t at = 0;
    for (int n = 1; n <= r.n_max; ++n) {
      bool violated = l_total(d, a, n) > l_total(d, a + 1, n);
      bool listed = at < r.exceptions.size() && r.exceptions[at] == n;
      CHECK(violated == listed);
      if (listed) ++at;
    }
    CHECK(at == r.exceptions.size());
    int expect_stable = r.exceptions.empty() ? 1 : r.exceptions.back() + 1;
    CHECK(r.stable_from == expect_stable);
  }
}

TEST_CASE("a-shift scan edge and error cases") {
  auto empty = scan_a_shift_conjecture(2, 1, 0);
  CHECK(empty.exceptions.empty());
  CHECK(empty.stable_from == 1);
  CHECK(scan_a_shift_conjecture(3, 2, 1).exceptions.empty());
  // a+1 == 4 is a multiple of d+3 == 4
  CHECK_THROWS_AS(scan_a_shift_conjecture(1, 3, 10), std::domain_error);
  CHECK_THROWS_AS(scan_a_shift_conjecture(1, 4, 10), std::domain_error);
  // 2 and 3 canonicalize to the same class mod 5
  CHECK_THROWS_AS(scan_a_shift_conjecture(2, 2, 10), std::domain_error);
}
