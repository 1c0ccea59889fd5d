#include <gtest/gtest.h>

#include "emlab/emlab.hpp"

using namespace emlab;

namespace {

// Power-series reciprocal of c (c[0] != 0), first n coefficients.
std::vector<mpq_class> series_inverse(const std::vector<mpq_class>& c, std::size_t n) {
  std::vector<mpq_class> r(n);
  r[0] = 1 / c[0];
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k && j < c.size(); ++j) acc += c[j] * r[k - j];
    r[k] = -acc / c[0];
  }
  return r;
}

mpq_class fact(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return mpq_class(f);
}

// B_n / n! from t/(e^t - 1) = 1 / sum t^k/(k+1)!.
std::vector<mpq_class> bernoulli_by_series(std::size_t n) {
  std::vector<mpq_class> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = 1 / fact(static_cast<unsigned>(k + 1));
  auto r = series_inverse(c, n);
  for (std::size_t k = 0; k < n; ++k) r[k] *= fact(static_cast<unsigned>(k));
  return r;
}

// Derivative of a coefficient vector (x^j coefficients).
std::vector<mpq_class> derivative(const std::vector<mpq_class>& c) {
  std::vector<mpq_class> d;
  for (std::size_t j = 1; j < c.size(); ++j) d.push_back(c[j] * static_cast<long>(j));
  return d;
}

}  // namespace

TEST(Bernoulli, SmallValues) {
  EXPECT_EQ(bernoulli_number(0), 1);
  EXPECT_EQ(bernoulli_number(1), mpq_class(-1, 2));
  EXPECT_EQ(bernoulli_number(2), mpq_class(1, 6));
  EXPECT_EQ(bernoulli_number(4), mpq_class(-1, 30));
  EXPECT_EQ(bernoulli_number(12), mpq_class(-691, 2730));
  EXPECT_EQ(bernoulli_poly(1, mpq_class(1)), mpq_class(1, 2));
}

TEST(Bernoulli, MatchesGeneratingFunctionInverse) {
  const auto ref = bernoulli_by_series(61);
  for (unsigned n = 0; n <= 60; ++n) EXPECT_EQ(bernoulli_number(n), ref[n]) << n;
}

TEST(Bernoulli, OddNumbersVanish) {
  for (unsigned k = 1; 2 * k + 1 <= 50; ++k) EXPECT_EQ(bernoulli_number(2 * k + 1), 0) << k;
}

TEST(Bernoulli, PolynomialSmallCases) {
  for (const mpq_class& x : {mpq_class(0), mpq_class(1, 3), mpq_class(-7, 2), mpq_class(5)}) {
    EXPECT_EQ(bernoulli_poly(0, x), 1);
    EXPECT_EQ(bernoulli_poly(1, x), x - mpq_class(1, 2));
    EXPECT_EQ(bernoulli_poly(2, x), x * x - x + mpq_class(1, 6));
  }
  EXPECT_EQ(bernoulli_poly(2, mpq_class(5, 2), true), mpq_class(-1, 12));
  EXPECT_EQ(frac_part(mpq_class(-1, 3)), mpq_class(2, 3));
}

TEST(Bernoulli, DerivativeIdentity) {
  for (unsigned n = 0; n <= 50; ++n) {
    const auto d = derivative(bernoulli_poly_coeffs(n + 1));
    const auto b = bernoulli_poly_coeffs(n);
    ASSERT_EQ(d.size(), b.size());
    for (std::size_t j = 0; j < b.size(); ++j) EXPECT_EQ(d[j], b[j] * static_cast<long>(n + 1)) << n << ' ' << j;
  }
}

TEST(Bernoulli, TranslationIdentity) {
  const std::vector<mpq_class> xs{0, mpq_class(1, 3), mpq_class(-2, 5), 1};
  const std::vector<mpq_class> ys{mpq_class(1, 2), mpq_class(7, 3), -1};
  for (unsigned k = 0; k <= 50; k += 7)
    for (const auto& x : xs)
      for (const auto& y : ys) {
        mpq_class rhs = 0, ypow = 1;
        for (unsigned n = k + 1; n-- > 0;) {
          rhs += mpq_class(binomial(k, n)) * bernoulli_poly(n, x) * ypow;
          ypow *= y;
        }
        EXPECT_EQ(bernoulli_poly(k, mpq_class(x + y)), rhs);
      }
}

TEST(Euler, SmallValuesAndGeneratingFunction) {
  EXPECT_EQ(euler_poly(0, mpq_class(3)), 1);
  EXPECT_EQ(euler_poly(1, mpq_class(1)), mpq_class(1, 2));
  EXPECT_EQ(euler_poly(1, mpq_class(0)), mpq_class(-1, 2));
  // E_n(0)/n! from 2/(e^t + 1) = 1 / ((1 + e^t)/2).
  std::vector<mpq_class> c(30);
  c[0] = 1;
  for (unsigned k = 1; k < 30; ++k) c[k] = 1 / (2 * fact(k));
  const auto r = series_inverse(c, 30);
  for (unsigned n = 0; n < 30; ++n) EXPECT_EQ(euler_poly(n, mpq_class(0)), r[n] * fact(n)) << n;
}

TEST(Euler, BernoulliRelation) {
  for (unsigned n = 0; n <= 20; ++n)
    for (const mpq_class& x : {mpq_class(0), mpq_class(1, 3), mpq_class(1)}) {
      const mpq_class lhs = bernoulli_poly(n + 1, mpq_class(x / 2)) - bernoulli_poly(n + 1, mpq_class(x / 2 + mpq_class(1, 2)));
      mpz_class two;
      mpz_ui_pow_ui(two.get_mpz_t(), 2, n + 1);
      EXPECT_EQ(lhs, -mpq_class(n + 1, two) * euler_poly(n, x)) << n;
    }
}

TEST(Digamma, ExactAndClosedFormValues) {
  const auto ctx = PrecisionContext::with_bits(128);
  EXPECT_TRUE(digamma_constant(mpq_class(1), ctx).is_zero());
  EXPECT_LT(mp::abs(digamma_constant(mpq_class(2), ctx) + Real(1L, 128)).to_double(), 1e-36);
  const Real two_ln2 = mp::ln2(128) * 2L;
  EXPECT_LE(mp::abs(digamma_constant(mpq_class(1, 2), ctx) - two_ln2).to_double(), 1e-30);
  // C_{1/3} = pi/(2 sqrt 3) + (3/2) ln 3
  const Real c13 = mp::pi(128) / (mp::sqrt(Real(3L, 128)) * 2L) + mp::log(Real(3L, 128)) * 3L / 2L;
  EXPECT_LE(mp::abs(digamma_constant(mpq_class(1, 3), ctx) - c13).to_double(), 1e-30);
}

TEST(Digamma, AgreesWithMpfrDigamma) {
  const auto ctx = PrecisionContext::with_bits(160);
  for (const mpq_class& a : {mpq_class(3, 2), mpq_class(2), mpq_class(5, 2), mpq_class(-7, 3), mpq_class(17, 4), mpq_class(1, 100)}) {
    const Real ref = -mp::euler_gamma(200) - mp::digamma(Real(a, 200));
    EXPECT_LE(mp::abs(digamma_constant(a, ctx) - ref).to_double(), 1e-40) << a.get_str();
  }
}

TEST(Digamma, BruteForcePartialSums) {
  // sum_{m<M} (1/(m+a) - 1/(m+1)) + (1-a)/M-ish tail, in double precision.
  const double a = 0.5;
  const long M = 2000000;
  double s = 0.0;
  for (long m = M - 1; m >= 0; --m) s += 1.0 / (m + a) - 1.0 / (m + 1.0);
  s += (1.0 - a) / (M + 0.5 * a);
  const auto ctx = PrecisionContext::with_bits(64);
  EXPECT_NEAR(digamma_constant(mpq_class(1, 2), ctx).to_double(), s, 1e-9);
}

TEST(Digamma, PoleShiftsRejected) {
  const auto ctx = PrecisionContext::with_bits(64);
  for (long a : {0L, -1L, -5L}) {
    try {
      (void)digamma_constant(mpq_class(a), ctx);
      ADD_FAILURE() << a;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::PoleShift);
    }
  }
}
