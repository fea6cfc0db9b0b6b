#include <gtest/gtest.h>

#include "giryq/lp.hpp"
#include "giryq/random.hpp"
#include "oracles.hpp"

namespace giryq {
namespace {

Rational R(const char* s) { return parse_rational(s); }

LinearProgram three_point(Sense sense) {
  LinearProgram lp;
  lp.sense = sense;
  lp.objective = {R("1/2"), R("3/5"), R("9/10")};
  lp.constraints = {{R("1"), R("1/2"), R("3/10")}, {R("0"), R("1/2"), R("7/10")}};
  lp.rhs = {R("7/10"), R("3/10")};
  return lp;
}

void expect_feasible_point(const LinearProgram& lp, const LpSolution& sol) {
  ASSERT_EQ(sol.point.size(), lp.objective.size());
  Rational value = 0;
  for (std::size_t j = 0; j < sol.point.size(); ++j) {
    EXPECT_GE(sol.point[j], 0);
    value += lp.objective[j] * sol.point[j];
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < sol.point.size(); ++j) row += lp.constraints[i][j] * sol.point[j];
    EXPECT_EQ(row, lp.rhs[i]) << "row " << i;
  }
  EXPECT_EQ(value, sol.value);
}

TEST(LpTest, ThreePointMinimum) {
  const auto lp = three_point(Sense::minimize);
  const auto sol = lp_solve(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.value, Rational(14, 25));
  EXPECT_EQ(sol.point, (std::vector<Rational>{R("2/5"), R("3/5"), R("0")}));
  expect_feasible_point(lp, sol);
  EXPECT_EQ(oracle::solve_by_enumeration(lp).value, Rational(14, 25));
}

TEST(LpTest, ThreePointMaximum) {
  const auto lp = three_point(Sense::maximize);
  const auto sol = lp_solve(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.value, Rational(47, 70));
  EXPECT_EQ(sol.point, (std::vector<Rational>{R("4/7"), R("0"), R("3/7")}));
  expect_feasible_point(lp, sol);
  EXPECT_EQ(oracle::solve_by_enumeration(lp).value, Rational(47, 70));
}

TEST(LpTest, ContradictoryEqualitiesAreInfeasible) {
  LinearProgram lp;
  lp.objective = {R("1")};
  lp.constraints = {{R("1")}, {R("1")}};
  lp.rhs = {R("2"), R("3")};
  EXPECT_EQ(lp_solve(lp).status, LpStatus::infeasible);
}

TEST(LpTest, IdentityConstraintsForceTheSolution) {
  LinearProgram lp;
  lp.objective = {R("2"), R("-1"), R("1/3")};
  lp.constraints = {{R("1"), R("0"), R("0")}, {R("0"), R("1"), R("0")}, {R("0"), R("0"), R("1")}};
  lp.rhs = {R("1/4"), R("3"), R("0")};
  for (auto sense : {Sense::minimize, Sense::maximize}) {
    lp.sense = sense;
    const auto sol = lp_solve(lp);
    ASSERT_EQ(sol.status, LpStatus::optimal);
    EXPECT_EQ(sol.point, lp.rhs);
    EXPECT_EQ(sol.value, R("1/2") - R("3"));
  }
}

TEST(LpTest, Unbounded) {
  LinearProgram lp;
  lp.objective = {R("-1"), R("0")};
  lp.constraints = {{R("1"), R("-1")}};
  lp.rhs = {R("0")};
  EXPECT_EQ(lp_solve(lp).status, LpStatus::unbounded);
  EXPECT_EQ(oracle::solve_by_enumeration(lp).status, LpStatus::unbounded);
  lp.sense = Sense::maximize;
  EXPECT_EQ(lp_solve(lp).status, LpStatus::optimal);
}

TEST(LpTest, NoConstraints) {
  LinearProgram lp;
  lp.objective = {R("1"), R("2")};
  auto sol = lp_solve(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.value, 0);
  lp.objective = {R("1"), R("-2")};
  EXPECT_EQ(lp_solve(lp).status, LpStatus::unbounded);
}

TEST(LpTest, RedundantRowsAreDropped) {
  LinearProgram lp;
  lp.objective = {R("1"), R("2"), R("3")};
  lp.constraints = {{R("1"), R("1"), R("1")}, {R("2"), R("2"), R("2")}, {R("1"), R("0"), R("-1")}};
  lp.rhs = {R("1"), R("2"), R("0")};
  const auto sol = lp_solve(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  expect_feasible_point(lp, sol);
  EXPECT_EQ(sol.value, oracle::solve_by_enumeration(lp).value);
  EXPECT_EQ(sol.value, 2);
}

TEST(LpTest, DimensionMismatch) {
  LinearProgram lp;
  lp.objective = {R("1"), R("1")};
  lp.constraints = {{R("1")}};
  lp.rhs = {R("1")};
  try {
    lp_solve(lp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::dimension_mismatch);
  }
  lp.constraints = {{R("1"), R("1")}};
  lp.rhs = {};
  EXPECT_THROW(lp_solve(lp), Error);
}

// Beale's example cycles under the textbook largest-coefficient rule.
TEST(LpTest, TerminatesOnBealeCyclingExample) {
  LinearProgram lp;
  lp.objective = {R("0"), R("0"), R("0"), R("-3/4"), R("20"), R("-1/2"), R("6")};
  lp.constraints = {{R("1"), R("0"), R("0"), R("1/4"), R("-8"), R("-1"), R("9")},
                    {R("0"), R("1"), R("0"), R("1/2"), R("-12"), R("-1/2"), R("3")},
                    {R("0"), R("0"), R("1"), R("0"), R("0"), R("1"), R("0")}};
  lp.rhs = {R("0"), R("0"), R("1")};
  const auto sol = lp_solve(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.value, R("-5/4"));
  EXPECT_EQ(oracle::solve_by_enumeration(lp).value, R("-5/4"));
  expect_feasible_point(lp, sol);
  // C(10, 3) bases over structural plus artificial columns.
  EXPECT_LE(sol.pivots, 120u);
}

TEST(LpTest, TerminatesOnHighlyDegenerateInstances) {
  Sampler s(21);
  for (int i = 0; i < 100; ++i) {
    const std::size_t m = static_cast<std::size_t>(s.integer(1, 4));
    const std::size_t n = static_cast<std::size_t>(s.integer(1, 6));
    LinearProgram lp = s.linear_program(m, n);
    for (auto& b : lp.rhs) b = 0;  // every basis is degenerate
    const auto sol = lp_solve(lp);
    std::size_t bases = 1;
    for (std::size_t k = 0; k < m; ++k) bases = bases * (n + m - k) / (k + 1);
    // At most one visit per basis in each phase plus one drive-out pivot per row.
    ASSERT_LE(sol.pivots, 2 * bases + m);
    ASSERT_EQ(sol.status, oracle::solve_by_enumeration(lp).status);
  }
}

TEST(LpTest, AgreesWithBasisEnumeration) {
  Sampler s(22);
  int infeasible = 0, unbounded = 0;
  for (int i = 0; i < 300; ++i) {
    const LinearProgram lp = s.linear_program(static_cast<std::size_t>(s.integer(1, 4)),
                                              static_cast<std::size_t>(s.integer(1, 6)));
    const auto sol = lp_solve(lp);
    const auto ref = oracle::solve_by_enumeration(lp);
    ASSERT_EQ(sol.status, ref.status) << "instance " << i;
    infeasible += sol.status == LpStatus::infeasible;
    unbounded += sol.status == LpStatus::unbounded;
    if (sol.status != LpStatus::optimal) continue;
    ASSERT_EQ(sol.value, ref.value) << "instance " << i;
    expect_feasible_point(lp, sol);
  }
  EXPECT_GT(infeasible, 0);
  EXPECT_GT(unbounded, 0);
}

TEST(LpTest, MinimumIsNegatedMaximumOfNegatedObjective) {
  Sampler s(23);
  for (int i = 0; i < 200; ++i) {
    LinearProgram lp = s.linear_program(static_cast<std::size_t>(s.integer(1, 4)),
                                        static_cast<std::size_t>(s.integer(1, 6)));
    lp.sense = Sense::minimize;
    LinearProgram neg = lp;
    neg.sense = Sense::maximize;
    for (auto& c : neg.objective) c = -c;
    const auto a = lp_solve(lp), b = lp_solve(neg);
    ASSERT_EQ(a.status, b.status);
    if (a.status == LpStatus::optimal) {
      ASSERT_EQ(a.value, -b.value);
    }
  }
}

}  // namespace
}  // namespace giryq
