#include "lmm/lip.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lmm/error.hpp"

using namespace lmm;

namespace {

const GreyScale k256{256.0};
constexpr double kTol = 1e-9;
constexpr int kIterations = 10000;

double finite_value(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(-1000.0, 255.5)(rng);
}

}  // namespace

TEST(GreyScale, RejectsNonPositiveOrInfinite) {
  EXPECT_THROW(GreyScale{0.0}, PreconditionError);
  EXPECT_THROW(GreyScale{-1.0}, PreconditionError);
  EXPECT_THROW(GreyScale{kInf}, PreconditionError);
  EXPECT_DOUBLE_EQ(GreyScale{}.M(), 256.0);
}

TEST(LipPlus, Examples) {
  EXPECT_EQ(lip_plus(0.0, 77.0, k256), 77.0);
  EXPECT_EQ(lip_plus(128.0, 128.0, k256), 192.0);
  EXPECT_EQ(lip_plus(64.0, 192.0, k256), 208.0);
  EXPECT_EQ(lip_plus(-kInf, 100.0, k256), -kInf);
  EXPECT_EQ(lip_plus(100.0, -kInf, k256), -kInf);
}

TEST(LipPlus, BlackAbsorbs) {
  EXPECT_EQ(lip_plus(256.0, 17.0, k256), 256.0);
  EXPECT_EQ(lip_plus(-500.0, 256.0, k256), 256.0);
}

TEST(LipPlus, ExtremesAndPreconditions) {
  EXPECT_THROW((void)lip_plus(-kInf, 256.0, k256), LipDomainError);
  EXPECT_THROW((void)lip_plus(256.0, -kInf, k256), LipDomainError);
  EXPECT_THROW((void)lip_plus(257.0, 0.0, k256), PreconditionError);
  EXPECT_THROW((void)lip_plus(std::nan(""), 0.0, k256), PreconditionError);
}

TEST(LipNegate, Examples) {
  EXPECT_EQ(lip_negate(0.0, k256), 0.0);
  EXPECT_EQ(lip_negate(128.0, k256), -256.0);
  EXPECT_EQ(lip_negate(-kInf, k256), 256.0);
  EXPECT_THROW((void)lip_negate(256.0, k256), LipDomainError);
}

TEST(LipMinus, Examples) {
  EXPECT_EQ(lip_minus(93.0, 0.0, k256), 93.0);
  EXPECT_EQ(lip_minus(192.0, 128.0, k256), 128.0);
  EXPECT_EQ(lip_minus(0.0, 128.0, k256), -256.0);
  EXPECT_EQ(lip_minus(0.0, 128.0, k256), lip_negate(128.0, k256));
}

TEST(LipMinus, Extremes) {
  EXPECT_THROW((void)lip_minus(10.0, 256.0, k256), LipDomainError);
  EXPECT_THROW((void)lip_minus(-kInf, -kInf, k256), LipDomainError);
  EXPECT_EQ(lip_minus(256.0, 100.0, k256), 256.0);
  EXPECT_EQ(lip_minus(-kInf, 100.0, k256), -kInf);
  EXPECT_EQ(lip_minus(5.0, -kInf, k256), 256.0);
}

TEST(LipMinus, ProductFormIsNotTheInverse) {
  // The (a - b)(1 - b/M) form fails the inverse law; ours satisfies it.
  const double a = 192.0, b = 128.0;
  const double product_form = (a - b) * (1.0 - b / 256.0);
  EXPECT_NE(lip_plus(product_form, b, k256), a);
  EXPECT_EQ(lip_plus(lip_minus(a, b, k256), b, k256), a);
}

TEST(LipTimes, Examples) {
  EXPECT_NEAR(lip_times(1.0, 123.0, k256), 123.0, kTol);
  EXPECT_NEAR(lip_times(2.0, 128.0, k256), 192.0, kTol);
  EXPECT_NEAR(lip_times(0.5, 192.0, k256), 128.0, kTol);
  EXPECT_EQ(lip_times(0.0, 200.0, k256), 0.0);
  EXPECT_NEAR(lip_times(-1.0, 128.0, k256), lip_negate(128.0, k256), kTol);
  EXPECT_EQ(lip_times(3.0, -kInf, k256), -kInf);
  EXPECT_EQ(lip_times(3.0, 256.0, k256), 256.0);
  EXPECT_THROW((void)lip_times(0.0, -kInf, k256), LipDomainError);
  EXPECT_THROW((void)lip_times(-1.0, 256.0, k256), LipDomainError);
}

TEST(Transmittance, Examples) {
  EXPECT_EQ(transmittance(0.0, k256), 1.0);
  EXPECT_EQ(transmittance(256.0, k256), 0.0);
  EXPECT_EQ(transmittance(128.0, k256), 0.5);
  EXPECT_EQ(transmittance(-kInf, k256), kInf);
}

TEST(Acute, Examples) {
  EXPECT_EQ(to_acute(0.0, k256), 0.0);
  EXPECT_NEAR(to_acute(128.0, k256), std::numbers::ln2, 1e-15);
  EXPECT_EQ(to_acute(256.0, k256), kInf);
  EXPECT_EQ(to_acute(-kInf, k256), -kInf);
  EXPECT_EQ(from_acute(0.0, k256), 0.0);
  EXPECT_EQ(from_acute(kInf, k256), 256.0);
  EXPECT_EQ(from_acute(-kInf, k256), -kInf);
}

TEST(Acute, StrictlyIncreasing) {
  double prev = to_acute(-1000.0, k256);
  for (double v = -999.5; v < 256.0; v += 0.5) {
    const double a = to_acute(v, k256);
    EXPECT_GT(a, prev) << v;
    prev = a;
  }
}

// ---------------------------------------------------------------------------
// Vector-space laws on fuzzed finite operands.

class LipPropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng{12345};
};

TEST_F(LipPropertyTest, GroupLaws) {
  for (int i = 0; i < kIterations; ++i) {
    const double a = finite_value(rng), b = finite_value(rng), c = finite_value(rng);
    ASSERT_NEAR(lip_plus(lip_plus(a, b, k256), c, k256), lip_plus(a, lip_plus(b, c, k256), k256), kTol);
    ASSERT_NEAR(lip_plus(a, b, k256), lip_plus(b, a, k256), kTol);
    ASSERT_NEAR(lip_plus(a, lip_negate(a, k256), k256), 0.0, kTol);
    ASSERT_NEAR(lip_plus(lip_minus(a, b, k256), b, k256), a, kTol);
    ASSERT_NEAR(lip_negate(lip_negate(a, k256), k256), a, kTol);
  }
}

TEST_F(LipPropertyTest, OrderLaws) {
  for (int i = 0; i < kIterations; ++i) {
    double a = finite_value(rng), b = finite_value(rng);
    if (a > b) std::swap(a, b);
    const double c = finite_value(rng);
    ASSERT_LE(lip_plus(a, c, k256), lip_plus(b, c, k256));
    ASSERT_LE(lip_minus(a, c, k256), lip_minus(b, c, k256));
    ASSERT_GE(lip_negate(a, k256), lip_negate(b, k256));
    // Result is an image iff a >= b.
    ASSERT_EQ(lip_minus(b, a, k256) >= 0.0, b >= a);
  }
}

TEST_F(LipPropertyTest, Closure) {
  std::uniform_real_distribution<double> image_value(0.0, 255.999);
  for (int i = 0; i < kIterations; ++i) {
    const double a = image_value(rng), b = image_value(rng);
    const double s = lip_plus(a, b, k256);
    ASSERT_GE(s, 0.0);
    ASSERT_LT(s, 256.0);
  }
}

TEST_F(LipPropertyTest, ScalarMultiplicationConsistent) {
  for (int i = 0; i < kIterations; ++i) {
    const double a = finite_value(rng);
    ASSERT_NEAR(lip_times(2.0, a, k256), lip_plus(a, a, k256), kTol);
    const double l = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
    const double m = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
    const double x = std::uniform_real_distribution<double>(-100.0, 200.0)(rng);
    ASSERT_NEAR(lip_times(l + m, x, k256), lip_plus(lip_times(l, x, k256), lip_times(m, x, k256), k256),
                1e-7);
  }
}

TEST_F(LipPropertyTest, AcuteIsAHomomorphism) {
  for (int i = 0; i < kIterations; ++i) {
    const double a = finite_value(rng), b = finite_value(rng);
    ASSERT_NEAR(to_acute(lip_plus(a, b, k256), k256), to_acute(a, k256) + to_acute(b, k256), kTol);
    ASSERT_NEAR(from_acute(to_acute(a, k256), k256), a, kTol);
    const double t = std::uniform_real_distribution<double>(-20.0, 8.0)(rng);
    ASSERT_NEAR(to_acute(from_acute(t, k256), k256), t, kTol);
  }
}

TEST_F(LipPropertyTest, TransmittanceIsMultiplicative) {
  std::uniform_real_distribution<double> image_value(0.0, 255.5);
  for (int i = 0; i < kIterations; ++i) {
    const double a = image_value(rng), b = image_value(rng);
    ASSERT_NEAR(transmittance(lip_plus(a, b, k256), k256),
                transmittance(a, k256) * transmittance(b, k256), 1e-12);
  }
}

TEST(LipScale, OtherGreyScales) {
  const GreyScale s{1.0};
  EXPECT_EQ(lip_plus(0.5, 0.5, s), 0.75);
  EXPECT_EQ(lip_minus(0.75, 0.5, s), 0.5);
}
