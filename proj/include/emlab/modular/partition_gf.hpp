#pragma once

// P(q) = prod_{n>=1} 1/(1 - q^n) at q = e^{-z}, Re z > 0, kept in log form.

#include <cmath>

#include "emlab/numerics/log_complex.hpp"

namespace emlab {

/// Terms needed so that |q|^n < 2^{-(bits+16)}.
inline std::uint64_t partition_gf_terms(const Real& re_z, long bits) {
  const double x = re_z.to_double();
  if (!(x > 0.0)) fail(ErrorKind::Domain, "Re z must be positive");
  return static_cast<std::uint64_t>(std::ceil(static_cast<double>(bits + 16) * std::log(2.0) / x));
}

/// Log P(e^{-z}) = -sum_n Log(1 - q^n) as an unreduced complex number, summed in the
/// Lambert form sum_k (1/k) q^k/(1 - q^k).
inline Complex log_partition_sum(const Complex& z, const PrecisionContext& ctx) {
  ctx.validate();
  const std::uint64_t n_max = partition_gf_terms(z.re, ctx.bits);
  if (n_max > ctx.max_terms)
    fail(ErrorKind::SlowConvergence, "log_partition_gf needs " + std::to_string(n_max) + " terms, above max_terms");
  // 1 - q^k loses up to log2(1/|kz|) bits; q^k drifts by one ulp per step between resyncs.
  const double lost = std::max(0.0, -std::log2(mp::abs(z).to_double()));
  const mp::Prec g = ctx.prec() + 48 + static_cast<mp::Prec>(std::ceil(lost));
  const Complex zg(Real(z.re, g), Real(z.im, g));
  const Complex q = mp::exp(-zg);
  constexpr std::uint64_t kResync = 4096;

  Complex qk = q, one_minus(g), term(g), next(g), acc(g);
  Real t1(g), t2(g);
  const Real one(1L, g);
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    mpfr_sub(one_minus.re.get(), one.get(), qk.re.get(), MPFR_RNDN);
    mpfr_neg(one_minus.im.get(), qk.im.get(), MPFR_RNDN);
    mp::div_into(term, qk, one_minus, t1, t2);
    mpfr_div_ui(term.re.get(), term.re.get(), k, MPFR_RNDN);
    mpfr_div_ui(term.im.get(), term.im.get(), k, MPFR_RNDN);
    acc += term;
    if ((k + 1) % kResync == 0) {
      qk = mp::exp(-(zg * static_cast<long>(k + 1)));
    } else {
      mp::mul_into(next, qk, q, t1);
      std::swap(qk, next);
    }
  }
  return {Real(acc.re, ctx.prec()), Real(acc.im, ctx.prec())};
}

inline LogComplex log_partition_gf(const Complex& z, const PrecisionContext& ctx) {
  return LogComplex::from_log(log_partition_sum(z, ctx));
}

/// Bits needed to resolve the Table 1 error after the cancellation between
/// Log P(e^{-z}) and pi^2/(6z).
inline long partition_error_required_bits(const Complex& z) {
  const double mag = std::log2(M_PI * M_PI / 6.0 / mp::abs(z).to_double());
  return static_cast<long>(std::ceil(std::max(mag, 0.0))) + 64;
}

/// |P(e^{-z}) sqrt(2 pi/z) e^{-pi^2/(6z)} - 1|, from
/// S = Log P(e^{-z}) + (1/2) Log(2 pi/z) - pi^2/(6z) and |e^S - 1|.
inline Real partition_main_term_error(const Complex& z, const PrecisionContext& ctx) {
  if (!(z.re.sign() > 0)) fail(ErrorKind::Domain, "Re z must be positive");
  const mp::Prec p = ctx.prec() + 16;
  const Complex zg(Real(z.re, p), Real(z.im, p));
  Complex S = log_partition_sum(zg, ctx.at_bits(ctx.bits + 16));
  const Real pi = mp::pi(p);
  // Log(2 pi/z) = log(2 pi) - Log z for Re z > 0.
  Complex half_log = Complex(mp::log(pi * 2L)) - mp::log(zg);
  half_log /= 2L;
  S += half_log;
  S -= Complex(pi * pi / 6L) / zg;
  return mp::abs(expm1_complex(S, ctx));
}

}  // namespace emlab
