#include <gtest/gtest.h>

#include "emlab/emlab.hpp"

using namespace emlab;

namespace {

mpq_class fact(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return mpq_class(f);
}

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

// Coefficients of (1 - e^{-w})/w.
std::vector<mpq_class> one_minus_exp_over_w(std::size_t n) {
  std::vector<mpq_class> d(n);
  for (std::size_t j = 0; j < n; ++j) d[j] = (j % 2 ? -1 : 1) / fact(static_cast<unsigned>(j + 1));
  return d;
}

// w / (1 - e^{-w}): the w^{k-1} coefficient of 1/(1 - e^{-w}) is entry k.
std::vector<mpq_class> geometric(std::size_t n) { return series_inverse(one_minus_exp_over_w(n), n); }

// log of a series with constant term 1, via L' = d'/d.
std::vector<mpq_class> series_log(const std::vector<mpq_class>& d, std::size_t n) {
  std::vector<mpq_class> dp(n);
  for (std::size_t j = 0; j + 1 < n && j + 1 < d.size(); ++j) dp[j] = d[j + 1] * static_cast<long>(j + 1);
  const auto inv = series_inverse(d, n);
  std::vector<mpq_class> q(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j <= k; ++j) q[k] += dp[j] * inv[k - j];
  std::vector<mpq_class> L(n);
  for (std::size_t k = 1; k < n; ++k) L[k] = q[k - 1] / static_cast<long>(k);
  return L;
}

mpq_class exact(const Scalar& s) {
  EXPECT_TRUE(s.exact());
  return s.exact() ? s.rational() : mpq_class(0);
}

}  // namespace

TEST(ExpandRegular, GeometricSeriesAtZero) {
  const auto g = geometric(25);
  for (unsigned N = 1; N <= 20; ++N) {
    const ExpansionSeries s = expand_regular(models::exp(), 0, N);
    EXPECT_EQ(s.kind, ExpansionKind::Regular);
    EXPECT_EQ(exact(s.inv_coeff(1)), 1);
    ASSERT_EQ(s.poly.size(), N);
    for (unsigned n = 0; n < N; ++n) EXPECT_EQ(exact(s.poly[n]), g[n + 1]) << N << ' ' << n;
  }
  const auto s3 = expand_regular(models::exp(), 0, 3);
  EXPECT_EQ(exact(s3.poly[0]), mpq_class(1, 2));
  EXPECT_EQ(exact(s3.poly[1]), mpq_class(1, 12));
  EXPECT_EQ(exact(s3.poly[2]), 0);
}

TEST(ExpandRegular, ShiftOneDropsTheConstant) {
  const auto s = expand_regular(models::exp(), 1, 2);
  EXPECT_EQ(exact(s.inv_coeff(1)), 1);
  EXPECT_EQ(exact(s.poly[0]), mpq_class(-1, 2));
  EXPECT_EQ(exact(s.poly[1]), mpq_class(1, 12));
}

TEST(ExpandRegular, GeneralShiftMatchesClosedForm) {
  // sum_{m>=0} e^{-w(m+a)} = e^{-aw}/(1 - e^{-w}); Taylor of e^{-aw} times the geometric part.
  const mpq_class a(2, 7);
  const unsigned N = 10;
  const auto g = geometric(N + 2);
  std::vector<mpq_class> ea(N + 2);
  mpq_class p = 1;
  for (unsigned k = 0; k < N + 2; ++k) {
    ea[k] = p / fact(k);
    p *= -a;
  }
  const auto s = expand_regular(models::exp(), a, N);
  for (unsigned n = 0; n < N; ++n) {
    mpq_class c = 0;  // coefficient of w^n in (1/w) g(w) ea(w)
    for (unsigned j = 0; j <= n + 1; ++j) c += g[j] * ea[n + 1 - j];
    EXPECT_EQ(exact(s.poly[n]), c) << n;
  }
}

TEST(ExpandRegular, EisensteinKernel) {
  const auto s = expand_regular(models::eisenstein_kernel(), 1, 6);
  const std::vector<mpq_class> expect{0, 0, 0, mpq_class(-1, 240), 0, 0};
  for (unsigned n = 0; n < 6; ++n) EXPECT_EQ(exact(s.poly[n]), expect[n]) << n;
  const Real pi = mp::pi(256);
  const Real integral = s.inv_coeff(1).to_real(256);
  EXPECT_LT(mp::abs(integral - mp::pow(pi, 4L) / 15L).to_double(), 1e-70);
  // All further poly terms vanish as well: b_n B_{n+1}(1) = 0 for n >= 4.
  const auto s20 = expand_regular(models::eisenstein_kernel(), 1, 20);
  for (unsigned n = 4; n < 20; ++n) EXPECT_TRUE(s20.poly[n].is_zero()) << n;
}

TEST(ExpandRegular, Errors) {
  try {
    (void)expand_regular(models::exp(8), 0, 9);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientTaylorData);
  }
  EXPECT_THROW((void)expand_regular(models::exp_over_x(), 1, 2), Error);
  try {
    require_dimension(3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
  }
  EXPECT_NO_THROW(require_dimension(2));
}

TEST(ExpandPole, ClosedFormLogSeries) {
  // sum e^{-w(m+1)}/(w(m+1)) = -Log(1 - e^{-w})/w = Log(1/w)/w - Log(d(w))/w.
  const unsigned N = 8;
  const auto L = series_log(one_minus_exp_over_w(N + 2), N + 2);
  const auto s = expand_pole(models::exp_over_x(), 1, N);
  EXPECT_EQ(exact(s.log_over_w), 1);
  EXPECT_EQ(exact(s.inv_coeff(1)), 0);
  for (unsigned n = 0; n < N; ++n) EXPECT_EQ(exact(s.poly[n]), -L[n + 1]) << n;
}

TEST(ExpandPole, HalfShiftUsesDigammaConstant) {
  const auto ctx = PrecisionContext::with_bits(128);
  const auto s = expand_pole(models::exp_over_x(), mpq_class(1, 2), 2, ctx);
  EXPECT_FALSE(s.inv_coeff(1).exact());
  EXPECT_LT(mp::abs(s.inv_coeff(1).to_real(128) - mp::ln2(128) * 2L).to_double(), 1e-30);
  // Direct lattice sum at w = 1e-3 agrees to O(w^2).
  const SectorPoint w(Complex(Real("1e-3", 160), Real(160)), 1.0);
  const LatticeSum direct = shifted_sum(models::exp_over_x(), w, mpq_class(1, 2), PrecisionContext::with_bits(160));
  const Complex approx = eval_expansion(s, w, ctx);
  EXPECT_LT(mp::abs(direct.value - approx).to_double(), 5e-6);
}

TEST(ExpandPole, Errors) {
  try {
    (void)expand_pole(models::exp(), 1, 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientPole);
  }
  for (long a : {0L, -3L}) {
    try {
      (void)expand_pole(models::exp_over_x(), a, 2);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::PoleShift);
    }
  }
}

TEST(ExpandAlternating, ClosedForms) {
  // 1/(1 + e^{-w}) = 1 / (2 - w + w^2/2 - ...)
  std::vector<mpq_class> c(14);
  c[0] = 2;
  for (unsigned k = 1; k < 14; ++k) c[k] = (k % 2 ? -1 : 1) / fact(k);
  const auto r = series_inverse(c, 14);
  for (unsigned N = 1; N <= 12; ++N) {
    const auto s = expand_alternating(models::exp(), 0, N);
    EXPECT_TRUE(s.inv.empty() || s.inv_coeff(1).is_zero());
    for (unsigned n = 0; n < N; ++n) EXPECT_EQ(exact(s.poly[n]), r[n]) << N << ' ' << n;
  }
  const auto s4 = expand_alternating(models::exp(), 0, 4);
  EXPECT_EQ(exact(s4.poly[0]), mpq_class(1, 2));
  // 1/(1 + e^{-w}) = 1/2 + w/4 - w^3/48 + ...
  EXPECT_EQ(exact(s4.poly[1]), mpq_class(1, 4));
  EXPECT_EQ(exact(s4.poly[2]), 0);
  EXPECT_EQ(exact(s4.poly[3]), mpq_class(-1, 48));
  const auto s1 = expand_alternating(models::exp(), 1, 2);
  EXPECT_EQ(exact(s1.poly[0]), mpq_class(1, 2));
  EXPECT_EQ(exact(s1.poly[1]), mpq_class(-1, 4));
}

TEST(Expand2D, SquareOfOneDimensional) {
  const unsigned N = 4;
  const auto s = expand_2d(models::exp2d(1, 1), {0, 0}, N);
  const auto g = geometric(N + 4);  // g[k] is the w^{k-1} coefficient of the 1-D series
  auto square = [&](int power) {   // w^power coefficient of (sum_k g[k] w^{k-1})^2
    mpq_class c = 0;
    for (int i = 0; i < static_cast<int>(g.size()); ++i) {
      const int j = power + 2 - i;
      if (j >= 0 && j < static_cast<int>(g.size())) c += g[i] * g[j];
    }
    return c;
  };
  EXPECT_EQ(exact(s.inv_coeff(2)), square(-2));
  EXPECT_EQ(exact(s.inv_coeff(1)), square(-1));
  for (unsigned n = 0; n + 1 < N; ++n) EXPECT_EQ(exact(s.poly[n]), square(static_cast<int>(n))) << n;
}

TEST(Expand2D, AsymmetricShiftAgainstLatticeSum) {
  auto ctx = PrecisionContext::with_bits(96);
  ctx.tail_tol = 1e-14;
  const FunctionModel2D f = models::exp2d(1, 2);
  const std::pair<mpq_class, mpq_class> a{0, 1};
  const auto s = expand_2d(f, a, 3);
  auto remainder = [&](const char* r) {
    const SectorPoint w = SectorPoint::on_ray(Real(r, 96), mp::pi(96) / 6L, Real(1.0, 96));
    const LatticeSum direct = shifted_sum_2d(f, w, a, ctx);
    return mp::abs(direct.value - eval_expansion(s, w, ctx)).to_double();
  };
  // Halving |w| shrinks the remainder by at least 2^{N-1}: the edge sums stop at n < N.
  const double r1 = remainder("0.08"), r2 = remainder("0.04");
  EXPECT_LT(r1, 1e-2);
  EXPECT_GT(r1 / r2, 3.5) << r1 << " " << r2;
}

TEST(EvalExpansion, SmallCases) {
  const auto ctx = PrecisionContext::with_bits(128);
  ExpansionSeries inv;
  inv.inv[1] = Scalar(1);
  EXPECT_EQ(eval_expansion(inv, Complex(Real(2L, 128)), ctx).re.to_double(), 0.5);

  ExpansionSeries lg;
  lg.log_over_w = Scalar(1);
  const Complex v = eval_expansion(lg, Complex(Real("0.1", 128)), ctx);
  EXPECT_NEAR(v.re.to_double(), 23.0258509299, 1e-9);
  EXPECT_NEAR(v.im.to_double(), 0.0, 1e-30);

  ExpansionSeries geo;
  geo.inv[1] = Scalar(1);
  geo.poly = {Scalar(mpq_class(1, 2)), Scalar(mpq_class(1, 12))};
  EXPECT_NEAR(eval_expansion(geo, Complex(Real("0.1", 128)), ctx).re.to_double(), 10.5083333333333, 1e-12);
  EXPECT_THROW((void)eval_expansion(geo, Complex(Real(-1L, 128)), ctx), Error);
}

TEST(RemainderFit, GeometricSlopes) {
  const auto ctx = PrecisionContext::with_bits(128);
  const auto f = models::exp();
  const FitResult r3 = fit_remainder_order(expand_regular(f, 0, 3), f, 0, 0.0, ctx);
  EXPECT_GE(r3.slope, 2.85);
  EXPECT_LE(r3.slope, 3.15);
  const FitResult r1 = fit_remainder_order(expand_regular(f, 0, 1), f, 0, M_PI / 4, ctx);
  EXPECT_GE(r1.slope, 0.85);
  EXPECT_LE(r1.slope, 1.15);
  EXPECT_GE(r1.samples.size(), 8u);
}

TEST(RemainderFit, EisensteinRemainderIsBeyondAllOrders) {
  const auto ctx = PrecisionContext::with_bits(128);
  const auto f = models::eisenstein_kernel();
  try {
    const FitResult r = fit_remainder_order(expand_regular(f, 1, 5), f, 1, M_PI / 6, ctx);
    EXPECT_GE(r.slope, 5.0);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateFit);
  }
}

TEST(RemainderFit, ConfigValidation) {
  const auto ctx = PrecisionContext::with_bits(64);
  FitConfig cfg;
  cfg.points = 4;
  const auto f = models::exp();
  EXPECT_THROW((void)fit_remainder_order(expand_regular(f, 0, 1), f, 0, 0.0, ctx, cfg), Error);
}
