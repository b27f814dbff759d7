#include "doctest.h"

#include "widthlab/lp.hpp"
#include "widthlab/scalar.hpp"

using namespace widthlab;

TEST_SUITE_BEGIN("scalar_lp");

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(parse_rational("1.25") == Rat(5, 4));
  CHECK(parse_rational("-0.5") == Rat(-1, 2));
  CHECK(parse_rational("1618/1000") == Rat(809, 500));
  CHECK(format_rational(Rat(4)) == "4/1");
  CHECK(format_rational(Rat(-6, 4)) == "-3/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("double predicates honor the global tolerance") {
  const double saved = numeric_tolerance();
  numeric_tolerance() = 1e-6;
  CHECK(ScalarTraits<double>::eq(1.0, 1.0 + 1e-7));
  CHECK_FALSE(ScalarTraits<double>::eq(1.0, 1.0 + 1e-5));
  CHECK(ScalarTraits<double>::sign(1e-7) == 0);
  numeric_tolerance() = saved;
}

namespace {

LpSolution<Rat> solve(std::vector<std::vector<long>> a, std::vector<long> b, std::vector<long> c) {
  const int m = static_cast<int>(a.size()), n = static_cast<int>(c.size());
  DynMatrix<Rat> A(m, n);
  DynVector<Rat> bb(m), cc(n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) A(i, j) = Rat(a[i][j]);
    bb(i) = Rat(b[i]);
  }
  for (int j = 0; j < n; ++j) cc(j) = Rat(c[j]);
  return lp_maximize<Rat>(A, bb, cc);
}

}  // namespace

TEST_CASE("simplex: bounded optimum on a box") {
  // max x + y st x <= 2, y <= 3, x + y <= 4
  const auto sol = solve({{1, 0}, {0, 1}, {1, 1}}, {2, 3, 4}, {1, 1});
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective == Rat(4));
}

TEST_CASE("simplex: free variables and negative rhs") {
  // max -x st -x <= -3  (i.e. x >= 3): optimum x = 3, objective -3.
  const auto sol = solve({{-1}}, {-3}, {-1});
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective == Rat(-3));
  CHECK(sol.x(0) == Rat(3));
}

TEST_CASE("simplex: infeasible and unbounded detection") {
  CHECK(solve({{1}, {-1}}, {0, -1}, {1}).status == LpStatus::infeasible);  // x <= 0, x >= 1
  CHECK(solve({{1}}, {1}, {-1}).status == LpStatus::unbounded);            // min x with x <= 1, x free
}

TEST_CASE("simplex: exact rational optimum") {
  // max 3x + 2y st 2x + y <= 7/2, x + 3y <= 9/4, x,y free but bounded by extra rows
  DynMatrix<Rat> A(4, 2);
  DynVector<Rat> b(4), c(2);
  A << Rat(2), Rat(1), Rat(1), Rat(3), Rat(-1), Rat(0), Rat(0), Rat(-1);
  b << Rat(7, 2), Rat(9, 4), Rat(0), Rat(0);
  c << Rat(3), Rat(2);
  const auto sol = lp_maximize<Rat>(A, b, c);
  REQUIRE(sol.status == LpStatus::optimal);
  // Vertex of 2x+y=7/2, x+3y=9/4: x = 33/20, y = 1/5.
  CHECK(sol.x(0) == Rat(33, 20));
  CHECK(sol.x(1) == Rat(1, 5));
  CHECK(sol.objective == Rat(3) * Rat(33, 20) + Rat(2) * Rat(1, 5));
}

TEST_CASE("simplex: degenerate ties terminate (Bland)") {
  // Many redundant constraints through the same vertex.
  DynMatrix<Rat> A(5, 2);
  DynVector<Rat> b(5), c(2);
  A << Rat(1), Rat(0), Rat(0), Rat(1), Rat(1), Rat(1), Rat(2), Rat(1), Rat(1), Rat(2);
  b << Rat(1), Rat(1), Rat(2), Rat(3), Rat(3);
  c << Rat(1), Rat(1);
  const auto sol = lp_maximize<Rat>(A, b, c);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective == Rat(2));
}

TEST_SUITE_END();
