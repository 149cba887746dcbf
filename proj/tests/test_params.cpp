#include "meixner/params.hpp"

#include <gtest/gtest.h>

using namespace meixner;

TEST(Classify, FiveCases) {
  EXPECT_EQ(classify(0, 0), MeixnerCase::Gaussian);
  EXPECT_EQ(classify(1, 0), MeixnerCase::Poisson);
  EXPECT_EQ(classify(-3, 0), MeixnerCase::Poisson);
  EXPECT_EQ(classify(2, 1), MeixnerCase::Gamma);
  EXPECT_EQ(classify(3, 2), MeixnerCase::Pascal);
  EXPECT_EQ(classify(1, 1), MeixnerCase::MeixnerSecondKind);
  EXPECT_EQ(classify(0, 1), MeixnerCase::MeixnerSecondKind);
}

TEST(Classify, ExactBoundary) {
  // lambda^2 = 4 eta resolved exactly with rational inputs
  EXPECT_EQ(classify(1, Rat(1, 4)), MeixnerCase::Gamma);
  EXPECT_EQ(classify(1, Rat(1, 4) + Rat(1, 1000000)), MeixnerCase::MeixnerSecondKind);
  EXPECT_EQ(classify(1, Rat(1, 4) - Rat(1, 1000000)), MeixnerCase::Pascal);
}

TEST(Classify, RejectsNegativeEta) {
  EXPECT_THROW(classify(0, -1), std::invalid_argument);
  try {
    classify(0, -1);
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "eta must be nonnegative");
  }
}

TEST(Params, Validation) {
  EXPECT_THROW(MeixnerParams(Framework::Classical, 0, -1), std::invalid_argument);
  EXPECT_THROW(MeixnerParams(Framework::Classical, 0, 0, 0), std::invalid_argument);
  EXPECT_NO_THROW(MeixnerParams(Framework::Free, -5, Rat(1, 2), Rat(3, 7)));
}

TEST(AlphaBeta, Examples) {
  const auto zero = alpha_beta_exact(0, 0);
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->alpha, 0);
  EXPECT_EQ(zero->beta, 0);

  // expand (1 - 2x)(1 - x) = 1 - 3x + 2x^2, i.e. lambda = -3, eta = 2
  const auto split = alpha_beta_exact(-3, 2);
  ASSERT_TRUE(split);
  EXPECT_EQ(split->alpha, 2);
  EXPECT_EQ(split->beta, 1);

  const auto poisson = alpha_beta_exact(2, 0);
  ASSERT_TRUE(poisson);
  EXPECT_EQ(poisson->alpha, -2);
  EXPECT_EQ(poisson->beta, 0);
}

TEST(AlphaBeta, RoundTripOnRationalGrid) {
  const Rat lambdas[] = {0, 1, -1, 2, Rat(-7, 3), Rat(5, 2)};
  const Rat etas[] = {0, Rat(1, 4), 1, 2, Rat(9, 16)};
  for (const Rat& l : lambdas)
    for (const Rat& e : etas) {
      if (const auto ab = alpha_beta_exact(l, e)) {
        EXPECT_EQ(-(ab->alpha + ab->beta), l);
        EXPECT_EQ(ab->alpha * ab->beta, e);
        if (e > 0) EXPECT_GE(ab->alpha, ab->beta);
      }
      const auto ab = alpha_beta(l, e);
      EXPECT_NEAR(-(ab.alpha + ab.beta).real(), to_double(l), 1e-12);
      EXPECT_NEAR((ab.alpha * ab.beta).real(), to_double(e), 1e-12);
      EXPECT_NEAR((ab.alpha + ab.beta).imag(), 0.0, 1e-12);
      EXPECT_NEAR((ab.alpha * ab.beta).imag(), 0.0, 1e-12);
    }
}

TEST(AlphaBeta, ConjugatePair) {
  EXPECT_FALSE(alpha_beta_exact(1, 1));
  const auto ab = alpha_beta(1, 1);
  EXPECT_GT(ab.alpha.imag(), 0.0);
  EXPECT_DOUBLE_EQ(ab.alpha.real(), ab.beta.real());
  EXPECT_DOUBLE_EQ(ab.alpha.imag(), -ab.beta.imag());
  EXPECT_NEAR(ab.alpha.imag(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(AlphaBeta, NonSquareDiscriminantStaysFloating) {
  // lambda^2 - 4 eta = 5: irrational square root
  EXPECT_FALSE(alpha_beta_exact(3, 1));
  const auto ab = alpha_beta(3, 1);
  EXPECT_NEAR(ab.alpha.real(), (-3 + std::sqrt(5.0)) / 2, 1e-15);
}

TEST(LoweringWeight, FrameworkDichotomy) {
  EXPECT_EQ(lowering_weight(Framework::Classical, 5), 5);
  EXPECT_EQ(lowering_weight(Framework::Free, 5), 1);
  EXPECT_EQ(lowering_weight(Framework::Classical, 0), 0);
  EXPECT_EQ(lowering_weight(Framework::Free, 0), 0);
}
