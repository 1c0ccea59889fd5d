#pragma once

// g_3(q) = sum_{n>=1} n^3 q^n/(1 - q^n) at q = e^{-w}, and the error of
// g_3(e^{-w}) ~ pi^4/(15 w^4) - 1/240 checked against the inversion
// g_3(e^{-w}) = (2 pi/w)^4 (g_3(e^{-4 pi^2/w}) + 1/240) - 1/240.

#include <cmath>
#include <limits>
#include <optional>

#include "emlab/numerics/log_complex.hpp"

namespace emlab {

inline constexpr long kDefaultPrecisionCeiling = 1L << 16;

namespace detail {

/// Smallest M with sum_{n>M} n^3 r^n/(1 - r^n) <= e^{log_abs_tol}, r = e^{-x}.
inline std::uint64_t g3_cutoff(double x, double log_abs_tol, std::uint64_t max_terms) {
  // Start near the point where n^3 r^n reaches the tolerance, then walk forward.
  double guess = std::max(1.0, -log_abs_tol / x);
  for (int i = 0; i < 4; ++i) guess = std::max(1.0, (3.0 * std::log(guess) - log_abs_tol) / x);
  auto log_tail = [&](double M) {
    const double t = M + 1.0;
    const double log_ratio = 3.0 * std::log1p(1.0 / t) - x;
    if (log_ratio >= 0.0) return std::numeric_limits<double>::infinity();
    return 3.0 * std::log(t) - x * t - std::log(-std::expm1(-x * t)) - std::log(-std::expm1(log_ratio));
  };
  double lo = 0.0, hi = std::floor(guess);
  while (log_tail(hi) > log_abs_tol) {
    lo = hi;
    hi = std::ceil(hi * 1.5 + 1.0);
    if (hi > static_cast<double>(max_terms)) return max_terms + 1;
  }
  while (hi - lo > 1.0) {
    const double mid = std::floor((lo + hi) / 2.0);
    if (log_tail(mid) <= log_abs_tol) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double M = hi;
  return static_cast<std::uint64_t>(M);
}

/// log of a scale dominating |g_3(e^{-w})|: sum n^3 r^n/(1 - r^n) with r = e^{-Re w}.
inline double g3_log_scale(double x) {
  const double small = std::log(M_PI * M_PI * M_PI * M_PI / 15.0) - 4.0 * std::log(x);
  const double large = -x - std::log(-std::expm1(-x));
  return std::max(small, large);
}

}  // namespace detail

/// Number of terms summed by eisenstein_g3 at this precision.
inline std::uint64_t g3_terms(const Real& re_w, long bits, std::uint64_t max_terms) {
  const double x = re_w.to_double();
  if (!(x > 0.0)) fail(ErrorKind::Domain, "Re w must be positive");
  const double log_tol = -static_cast<double>(bits + 16) * std::log(2.0) + detail::g3_log_scale(x);
  return detail::g3_cutoff(x, log_tol, max_terms);
}

/// g_3(e^{-w}) as a complex number at the context precision, with the tail
/// beyond the cutoff below 2^{-(bits+16)} times the scale sum n^3 |q|^n/(1-|q|^n).
inline Complex eisenstein_g3_value(const Complex& w, const PrecisionContext& ctx) {
  ctx.validate();
  const std::uint64_t M = g3_terms(w.re, ctx.bits, ctx.max_terms);
  if (M > ctx.max_terms) fail(ErrorKind::SlowConvergence, "g3 needs more than max_terms terms");
  const double lost = std::max(0.0, -std::log2(mp::abs(w).to_double()));
  const mp::Prec g = ctx.prec() + 48 + static_cast<mp::Prec>(std::ceil(lost));
  const Complex wg(Real(w.re, g), Real(w.im, g));
  const Complex q = mp::exp(-wg);
  constexpr std::uint64_t kResync = 4096;

  Complex qn = q, one_minus(g), term(g), next(g), acc(g);
  Real t1(g), t2(g);
  const Real one(1L, g);
  for (std::uint64_t n = 1; n <= M; ++n) {
    mpfr_sub(one_minus.re.get(), one.get(), qn.re.get(), MPFR_RNDN);
    mpfr_neg(one_minus.im.get(), qn.im.get(), MPFR_RNDN);
    mp::div_into(term, qn, one_minus, t1, t2);
    for (int i = 0; i < 3; ++i) {
      mpfr_mul_ui(term.re.get(), term.re.get(), n, MPFR_RNDN);
      mpfr_mul_ui(term.im.get(), term.im.get(), n, MPFR_RNDN);
    }
    acc += term;
    if ((n + 1) % kResync == 0) {
      qn = mp::exp(-(wg * static_cast<long>(n + 1)));
    } else {
      mp::mul_into(next, qn, q, t1);
      std::swap(qn, next);
    }
  }
  return {Real(acc.re, ctx.prec()), Real(acc.im, ctx.prec())};
}

inline LogComplex eisenstein_g3(const Complex& w, const PrecisionContext& ctx) {
  if (!(w.re.sign() > 0)) fail(ErrorKind::Domain, "Re w must be positive");
  return LogComplex::from_complex(eisenstein_g3_value(w, ctx));
}

/// Bits for the cancellation g_3(e^{-w}) - pi^4/(15 w^4): 4 pi^2 Re(1/w)/ln 2 + |4 log2|2 pi/w|| + 64.
inline long g3_required_bits(const Complex& w) {
  const double wr = w.re.to_double(), wi = w.im.to_double();
  const double abs2 = wr * wr + wi * wi;
  const double re_inv = wr / abs2;
  const double l = std::log2(2.0 * M_PI / std::sqrt(abs2));
  return static_cast<long>(std::ceil(4.0 * M_PI * M_PI * re_inv / std::log(2.0) + std::fabs(4.0 * l))) + 64;
}

/// Working precision actually used by g3_error: the requirement plus guard bits for
/// the |w|/Re w scale mismatch and the accumulated rounding of the sum.
inline long g3_working_bits(const Complex& w, const PrecisionContext& ctx) {
  const double wr = w.re.to_double();
  const double ratio = mp::abs(w).to_double() / wr;
  const long req = g3_required_bits(w);
  long bits = req + static_cast<long>(std::ceil(4.0 * std::log2(ratio))) + 32;
  const double n_est = static_cast<double>(bits + 16) * std::log(2.0) / wr;
  bits += static_cast<long>(std::ceil(std::log2(std::max(n_est, 2.0))));
  return std::max(bits, ctx.bits);
}

struct G3Error {
  std::optional<LogComplex> direct;  // g_3(e^{-w}) - pi^4/(15 w^4) + 1/240
  LogComplex oracle;                 // (2 pi/w)^4 g_3(e^{-4 pi^2/w})
  long precision_bits = 0;
};

/// (2 pi/w)^4 g_3(e^{-4 pi^2/w}): cheap whenever Re(1/w) is large.
inline LogComplex g3_oracle(const Complex& w, const PrecisionContext& ctx) {
  if (!(w.re.sign() > 0)) fail(ErrorKind::Domain, "Re w must be positive");
  const mp::Prec g = ctx.prec() + 32;
  const Complex wg(Real(w.re, g), Real(w.im, g));
  const Real two_pi = mp::pi(g) * 2L;
  const Complex inv = Complex(two_pi * two_pi) / wg;
  const LogComplex g3 = eisenstein_g3(inv, ctx.at_bits(ctx.bits + 32));
  Complex factor = mp::log(Complex(two_pi) / wg);
  factor *= 4L;
  Complex total = g3.log() + factor;
  return LogComplex(Real(total.re, ctx.prec()), Real(total.im, ctx.prec()));
}

/// Direct error and modular oracle at the auto-derived precision.
inline G3Error g3_error(const Complex& w, const PrecisionContext& ctx, long ceiling = kDefaultPrecisionCeiling) {
  if (!(w.re.sign() > 0)) fail(ErrorKind::Domain, "Re w must be positive");
  const long bits = g3_working_bits(w, ctx);
  if (bits > ceiling)
    fail(ErrorKind::PrecisionRefused,
         "g3 error needs " + std::to_string(bits) + " bits, above the ceiling of " + std::to_string(ceiling));
  PrecisionContext work = ctx.at_bits(bits);
  work.tail_tol = ctx.tail_tol;
  const mp::Prec g = work.prec();
  const Complex wg(Real(w.re, g), Real(w.im, g));

  Complex s = eisenstein_g3_value(wg, work);
  const Complex w4 = mp::pow(wg, 4);
  const Real pi = mp::pi(g);
  s -= Complex(mp::pow(pi, 4L) / 15L) / w4;
  s += Complex(Real(1L, g) / 240L);

  G3Error out;
  out.direct = LogComplex::from_complex(s);
  out.oracle = g3_oracle(w, ctx.at_bits(std::max(ctx.bits, 128L)));
  out.precision_bits = bits;
  return out;
}

}  // namespace emlab
