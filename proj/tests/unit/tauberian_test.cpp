#include <gtest/gtest.h>

#include <random>

#include "emlab/emlab.hpp"

using namespace emlab;

namespace {

constexpr mp::Prec kP = 256;

Real rel(const Real& a, const Real& b) { return mp::abs((a - b) / b); }

InghamParams params(double lambda, double alpha, double beta, double gamma) {
  return {Real(lambda, kP), Real(alpha, kP), Real(beta, kP), Real(gamma, kP)};
}

}  // namespace

TEST(Ingham, ZeroLambda) {
  const auto p = params(0, 0.5, 1, 2);
  EXPECT_TRUE(ingham_coefficient_asymptotic(p, Real(100L, kP)).is_zero());
  EXPECT_TRUE(ingham_partial_sum_asymptotic(p, Real(100L, kP)).is_zero());
  EXPECT_TRUE(ingham_general_A(GrowthProfile{p}, Real(100L, kP)).is_zero());
}

TEST(Ingham, PartitionParametersReduceToHardyRamanujan) {
  const auto hr = InghamParams::partition(kP);
  const Real pi = mp::pi(kP);
  for (long n : {2L, 10L, 100L, 12345L, 50000L, 10000000L}) {
    const Real nr(n, kP);
    const Real ref = mp::log(Real(1L, kP) / (mp::sqrt(Real(3L, kP)) * 4L * nr)) + pi * mp::sqrt(nr * 2L / 3L);
    EXPECT_LE(mp::abs(ingham_coefficient_asymptotic(hr, nr).log - ref).to_double(), std::ldexp(1.0, -52)) << n;
  }
}

TEST(Ingham, PartitionRatios) {
  const auto hr = InghamParams::partition(kP);
  const auto p = partition_numbers(500);
  const Real c = ingham_coefficient_asymptotic(hr, Real(100L, kP)).value();
  const double r = (Real(p[100], kP) / c).to_double();
  EXPECT_GT(r, 0.95);
  EXPECT_LT(r, 1.05);
  mpz_class total = 0;
  for (std::size_t n = 0; n <= 500; ++n) total += p[n];
  const double rs = (Real(total, kP) / ingham_partial_sum_asymptotic(hr, Real(500L, kP)).value()).to_double();
  EXPECT_GT(rs, 0.9);
  EXPECT_LT(rs, 1.1);
}

TEST(Ingham, PartialSumOverCoefficientIsSqrtNOverGamma) {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int i = 0; i < 20; ++i) {
    const auto p = params(u(gen), u(gen) - 1.0, u(gen) - 1.5, u(gen));
    const Real N(u(gen) * 1000.0 + 2.0, kP);
    const Real lr = ingham_partial_sum_asymptotic(p, N).log - ingham_coefficient_asymptotic(p, N).log;
    EXPECT_LE(mp::abs(lr - mp::log(N / p.gamma) / 2L).to_double(), std::ldexp(1.0, -52));
  }
}

TEST(Ingham, GeneralAUnitCase) {
  const auto p = params(1, 0, 0, 1);
  const GrowthProfile prof{p};
  const Real one(1L, kP);
  EXPECT_EQ(prof.psi(one), one);
  EXPECT_EQ(prof.phi(one), one);
  EXPECT_EQ(prof.ddphi(one), Real(2L, kP));
  const Real ref = mp::exp(Real(2L, kP)) / (mp::sqrt(mp::pi(kP)) * 2L);
  EXPECT_LT(rel(ingham_general_A(prof, one).value(), ref).to_double(), 1e-70);
}

TEST(Ingham, GeneralAEqualsPartialSumFormula) {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> u(0.1, 4.0);
  for (int i = 0; i < 20; ++i) {
    const auto p = params(u(gen), 0.0, u(gen) - 2.0, u(gen));
    const Real x(u(gen) * 250.0 + 2.0, kP);
    const Real d = ingham_general_A(GrowthProfile{p}, x).log - ingham_partial_sum_asymptotic(p, x).log;
    // 30 significant digits of the value
    EXPECT_LT(mp::abs(d).to_double(), 1e-30) << i;
  }
}

TEST(Ingham, GeneralALogFactorRatio) {
  // With alpha != 0 the two forms differ by (1 - log gamma / log x)^alpha exactly.
  const auto p = params(0.7, 1.5, 0.25, 2.5);
  const Real x(1000L, kP);
  const Real d = ingham_general_A(GrowthProfile{p}, x).log - ingham_partial_sum_asymptotic(p, x).log;
  const Real ref = p.alpha * mp::log(Real(1L, kP) - mp::log(p.gamma) / mp::log(x));
  EXPECT_LT(mp::abs(d - ref).to_double(), 1e-60);
}

TEST(Ingham, GeneralAPartitionProfileMonotone) {
  const GrowthProfile prof{InghamParams::partition(kP)};
  Real prev = ingham_general_A(prof, Real(1000L, kP)).log;
  EXPECT_TRUE(prev.is_finite());
  for (long x = 1100; x <= 3000; x += 100) {
    const Real cur = ingham_general_A(prof, Real(x, kP)).log;
    EXPECT_GT(cur, prev);
    prev = cur;
  }
}

TEST(Ingham, DomainErrors) {
  const auto hr = InghamParams::partition(kP);
  EXPECT_THROW((void)ingham_coefficient_asymptotic(hr, Real(1L, kP)), Error);
  EXPECT_THROW((void)ingham_coefficient_asymptotic(params(1, 0, 0, 0), Real(10L, kP)), Error);
  EXPECT_THROW((void)ingham_partial_sum_asymptotic(params(-1, 0, 0, 1), Real(10L, kP)), Error);
  // psi(x) >= 1 with alpha != 0 has no real Log(1/psi)^alpha
  EXPECT_THROW((void)ingham_general_A(GrowthProfile{params(1, 1, 0, 4)}, Real(2L, kP)), Error);
}
