#include <gtest/gtest.h>

#include "emlab/emlab.hpp"

using namespace emlab;

namespace {

constexpr mp::Prec kP = 256;

double normalized(double t) {
  const auto ctx = PrecisionContext::with_bits(128);
  return ak_normalized_series(Real(t, 128), ctx).to_double();
}

}  // namespace

TEST(AkCoefficients, Blocks) {
  EXPECT_TRUE(ak_coefficient(0).is_zero());
  EXPECT_EQ(ak_coefficient(1).log, Real(2L, kP));
  EXPECT_EQ(ak_coefficient(7).log, Real(2L, kP));
  const Real two(2L, kP);
  const Real l8 = mp::sqrt(two) * 4L - mp::log(two) / 4L;
  EXPECT_LT(mp::abs(ak_coefficient(8).log - l8).to_double(), 1e-70);
  EXPECT_EQ(ak_coefficient(26).log, ak_coefficient(8).log);
  EXPECT_EQ(icbrt(mpz_class("1000000000000000000000000000000")), mpz_class("10000000000"));
  EXPECT_EQ(icbrt(mpz_class("999999999999999999999999999999")), mpz_class("9999999999"));
  EXPECT_THROW((void)ak_coefficient(-1), Error);
}

TEST(AkSeries, DirectSumAtTEqualsOne) {
  const auto ctx = PrecisionContext::with_bits(128);
  const Real t(1L, 160);
  Real direct(160);
  for (long n = 1; n < 11 * 11 * 11; ++n) direct += mp::exp(Real(ak_coefficient(n, 160).log, 160) - t * n);
  const Real got = ak_series(Real(1L, 128), ctx).value();
  EXPECT_LT(mp::abs((got - direct) / direct).to_double(), 1e-35);
}

TEST(AkSeries, NormalizedTendsToOne) {
  const double n1 = normalized(1e-1), n2 = normalized(1e-2), n3 = normalized(1e-3);
  EXPECT_LE(std::fabs(n3 - 1.0), 0.1);
  EXPECT_LT(std::fabs(n2 - 1.0), std::fabs(n1 - 1.0));
  EXPECT_LT(std::fabs(n3 - 1.0), std::fabs(n2 - 1.0));
}

TEST(AkExtremes, UpperIsExactlyOne) {
  for (const char* m : {"1", "10", "1000", "100000"}) {
    const AkExtremes e = ak_normalized_extremes(mpz_class(m));
    EXPECT_TRUE(e.log_u.is_zero()) << m;
    EXPECT_EQ(e.u(), Real(1L, kP));
  }
}

TEST(AkExtremes, LowerApproachesOne) {
  for (long m : {10L, 100L, 1000L, 10000L}) {
    const double l = ak_normalized_extremes(mpz_class(m)).l().to_double();
    EXPECT_LE(std::fabs(l - 1.0), 5.0 / std::sqrt(static_cast<double>(m))) << m;
  }
  EXPECT_THROW((void)ak_normalized_extremes(mpz_class(0)), Error);
}

TEST(AkRatios, LemmaRatio) {
  const auto ctx = PrecisionContext::with_bits(128);
  const double r1 = ak_gsum_ratio(Real(0.1, 128), ctx).to_double();
  const double r2 = ak_gsum_ratio(Real(0.01, 128), ctx).to_double();
  const double r3 = ak_gsum_ratio(Real(0.001, 128), ctx).to_double();
  EXPECT_LT(r1, 1.0);
  EXPECT_LE(r2, 1e-3);
  EXPECT_LT(r3, r2);
  EXPECT_LT(r2, r1);
  EXPECT_THROW((void)ak_gsum_ratio(Real(-1.0, 128), ctx), Error);
}

TEST(AkRatios, OscillationAgainstB) {
  Real prev_cube = ak_log_ratio_to_B(mpz_class(100) * 100 * 100);
  Real prev_pre = ak_log_ratio_to_B(mpz_class(101) * 101 * 101 - 1);
  for (long m = 200; m <= 10000; m += 200) {
    const mpz_class M(m);
    const Real cube = ak_log_ratio_to_B(M * M * M);
    const Real pre = ak_log_ratio_to_B((M + 1) * (M + 1) * (M + 1) - 1);
    EXPECT_GT(cube, prev_cube);
    EXPECT_LT(pre, prev_pre);
    EXPECT_LT(pre.sign(), 0);
    prev_cube = cube;
    prev_pre = pre;
  }
}
