#include "meixner/verify.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace meixner;

TEST(DefaultGrid, CoversAllFiveCasesPerFramework) {
  const auto grid = default_grid();
  ASSERT_EQ(grid.size(), 10u);
  int classical = 0;
  std::set<MeixnerCase> cases;
  for (const auto& p : grid) {
    if (p.framework == Framework::Classical) ++classical;
    cases.insert(classify(p.lambda, p.eta));
    EXPECT_EQ(p.t, 1);
  }
  EXPECT_EQ(classical, 5);
  EXPECT_EQ(cases.size(), 5u);
}

TEST(ParseSuites, NamesAndErrors) {
  EXPECT_EQ(parse_suites("all").size(), 5u);
  EXPECT_EQ(parse_suites("lowering"), std::vector<Suite>{Suite::Lowering});
  EXPECT_THROW(parse_suites("bogus"), std::invalid_argument);
}

TEST(RunSuite, ExactGridPasses) {
  for (const auto& p : default_grid())
    for (Suite s : parse_suites("all")) {
      const auto r = run_suite(s, p, s == Suite::Series ? 16 : 12, 1e-10);
      EXPECT_TRUE(r.pass) << r.suite << " " << name(r.framework) << " ("
                          << to_string(r.lambda) << "," << to_string(r.eta) << "): "
                          << r.detail;
      EXPECT_GE(r.elapsed_ms, 0);
      EXPECT_EQ(r.order, s == Suite::Series ? 16 : 12);
    }
}

TEST(RunSuite, ExactModeReportsExact) {
  const MeixnerParams p(Framework::Free, 1, Rat(1, 2));
  const auto r = run_suite(Suite::Series, p, 16, 1e-10);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.max_abs_error_str(), "exact");
}

TEST(RunSuite, FloatModeUsesTolerance) {
  // decimal inputs: same value, float verification path at default order
  // and tolerance; deviations are scale-normalized roundoff
  MeixnerParams p(Framework::Classical, Rat(1, 2), Rat(1, 4), 1, /*exact=*/false);
  for (Suite s : parse_suites("all")) {
    const auto r = run_suite(s, p, 16, 1e-10);
    EXPECT_TRUE(r.pass) << r.suite << ": " << r.detail;
    EXPECT_LE(r.max_err, 1e-10);
  }
}

TEST(RunSuite, ConjugateCaseRaisingReportsFloatError) {
  const MeixnerParams p(Framework::Classical, 1, 1);
  const auto r = run_suite(Suite::Raising, p, 12, 1e-10);
  EXPECT_TRUE(r.pass) << r.detail;
  EXPECT_FALSE(r.exact);
  EXPECT_LE(r.max_err, 1e-10);
}

TEST(RunSuite, TScalingCoveredByCumulantSuite) {
  const MeixnerParams p(Framework::Free, 2, 1, Rat(7, 2));
  const auto r = run_suite(Suite::Cumulants, p, 10, 1e-10);
  EXPECT_TRUE(r.pass) << r.detail;
  EXPECT_EQ(r.max_abs_error_str(), "exact");
}

TEST(RunSuite, NonUnitTPassesEverySuite) {
  for (Framework fw : {Framework::Classical, Framework::Free}) {
    const MeixnerParams p(fw, 1, Rat(1, 2), Rat(7, 3));
    for (Suite s : parse_suites("all")) {
      const auto r = run_suite(s, p, 10, 1e-10);
      EXPECT_TRUE(r.pass) << r.suite << " " << name(fw) << ": " << r.detail;
    }
  }
}

TEST(RunSuite, ImpossibleOrderFailsGracefully) {
  const MeixnerParams p(Framework::Classical, 0, 0);
  const auto r = run_suite(Suite::Decomposition, p, 1, 1e-10);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.detail.empty());
}
