#pragma once

// A(n) = e^{2 m^{3/2}} m^{-1/4} for m^3 <= n < (m+1)^3, A(0) = 0, and
// F(q) = sum A(n) q^n. Everything lives in log form: log A at m = 10^4 is ~2e6.

#include <cmath>
#include <utility>
#include <vector>

#include "emlab/numerics/log_complex.hpp"

namespace emlab {

/// floor(n^{1/3}) in exact integer arithmetic.
inline mpz_class icbrt(const mpz_class& n) {
  mpz_class r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
  return r;
}

/// 2 m^{3/2} - (1/4) log m.
inline Real ak_block_log(const mpz_class& m, mp::Prec prec) {
  const Real mr(m, prec);
  return mp::pow(mr, mpq_class(3, 2)) * 2L - mp::log(mr) / 4L;
}

inline LogReal ak_coefficient(const mpz_class& n, mp::Prec prec = 256) {
  if (sgn(n) < 0) fail(ErrorKind::Domain, "A(n) needs n >= 0");
  if (sgn(n) == 0) return LogReal::zero(prec);
  return {ak_block_log(icbrt(n), prec)};
}

namespace detail {

/// log of the summand m^{-1/4} e^{2 m^{3/2} - shift^3 t}, shift = m or m + 1.
inline Real ak_gterm(long m, long shift, const Real& t, mp::Prec prec) {
  const Real mr(m, prec);
  const Real s(shift, prec);
  return mp::pow(mr, mpq_class(3, 2)) * 2L - mp::log(mr) / 4L - s * s * s * t;
}

/// Sums exp(log_term(m)) over m >= 1 in log form. The summands are unimodal in m
/// with the peak near t^{-2/3}; summation stops past the peak once a term is
/// 2^{-(bits+16)} below the maximum and the term ratio certifies the tail.
template <typename LogTerm>
Real ak_log_sum(const Real& t, const PrecisionContext& ctx, LogTerm log_term) {
  if (!(t.sign() > 0)) fail(ErrorKind::Domain, "t must be positive");
  const mp::Prec p = ctx.prec() + 32;
  const double td = t.to_double();
  const double m_peak = std::pow(td, -2.0 / 3.0);
  const double drop = static_cast<double>(ctx.bits + 16) * std::log(2.0);
  std::vector<LogComplex> terms;
  double top = -std::numeric_limits<double>::infinity();
  double prev = top;
  for (long m = 1;; ++m) {
    if (static_cast<std::uint64_t>(m) > ctx.max_terms) fail(ErrorKind::SlowConvergence, "counterexample series: max_terms reached");
    Real lt = log_term(m, p);
    const double ld = lt.to_double();
    terms.push_back(LogComplex::from_log_real(std::move(lt)));
    top = std::max(top, ld);
    // Past the peak the log-terms are concave, so the ratio keeps shrinking and
    // the tail is at most term / (1 - ratio).
    if (static_cast<double>(m) > m_peak && ld < prev) {
      const double log_ratio = ld - prev;
      const double log_tail = ld + log_ratio - std::log(-std::expm1(log_ratio));
      if (log_tail < top - drop) break;
    }
    prev = ld;
  }
  return log_sum_exp(terms, ctx.at_bits(ctx.bits + 32)).log_mag;
}

}  // namespace detail

/// log F(e^{-t}) from F(e^{-t}) = (1 - e^{-t})^{-1} sum_{m>=1} e^{2m^{3/2}} m^{-1/4} (e^{-m^3 t} - e^{-(m+1)^3 t}).
inline LogReal ak_series(const Real& t, const PrecisionContext& ctx) {
  const Real s = detail::ak_log_sum(t, ctx, [&](long m, mp::Prec p) {
    const Real tp(t, p);
    const Real gap = Real(3L * m * m + 3L * m + 1L, p) * tp;  // (m+1)^3 - m^3 times t
    return detail::ak_gterm(m, m, tp, p) + mp::log(-mp::expm1(-gap));
  });
  const mp::Prec p = ctx.prec() + 32;
  Real out = s - mp::log(-mp::expm1(-Real(t, p)));
  return {Real(out, ctx.prec())};
}

/// F(e^{-t}) (3t/(2 sqrt pi)) e^{-1/t}, which tends to 1.
inline Real ak_normalized_series(const Real& t, const PrecisionContext& ctx) {
  const mp::Prec p = ctx.prec() + 32;
  const Real tp(t, p);
  Real l = Real(ak_series(t, ctx).log, p) + mp::log(tp * 3L / (mp::sqrt(mp::pi(p)) * 2L)) - Real(1L, p) / tp;
  return Real(mp::exp(l), ctx.prec());
}

struct AkExtremes {
  Real log_u;  // log of n^{1/12} e^{-2 sqrt n} A(n) at n = m^3
  Real log_l;  // log of n^{1/12} e^{-2 sqrt n + 3 n^{1/6}} A(n) at n = (m+1)^3 - 1
  [[nodiscard]] Real u() const { return mp::exp(log_u); }
  [[nodiscard]] Real l() const { return mp::exp(log_l); }
};

inline AkExtremes ak_normalized_extremes(const mpz_class& m, mp::Prec prec = 256) {
  if (sgn(m) <= 0) fail(ErrorKind::Domain, "m must be positive");
  const Real mr(m, prec);
  // At n = m^3: n^{1/12} = m^{1/4} and sqrt n = m^{3/2}, so the factors cancel exactly.
  const Real quarter_log = mp::log(mr) / 4L;
  const Real two_m32 = mp::pow(mr, mpq_class(3, 2)) * 2L;
  Real log_u = (quarter_log - two_m32) + (two_m32 - quarter_log);

  const mpz_class n = (m + 1) * (m + 1) * (m + 1) - 1;
  const Real nr(n, prec);
  Real log_l = mp::log(nr) / 12L - mp::sqrt(nr) * 2L + mp::pow(nr, mpq_class(1, 6)) * 3L + (two_m32 - quarter_log);
  return {std::move(log_u), std::move(log_l)};
}

/// log of A(n)/B(n) with B(n) = (1/3) n^{-1/4} e^{2 sqrt n}.
inline Real ak_log_ratio_to_B(const mpz_class& n, mp::Prec prec = 256) {
  if (sgn(n) <= 0) fail(ErrorKind::Domain, "n must be positive");
  const Real nr(n, prec);
  const Real log_b = -mp::log(Real(3L, prec)) - mp::log(nr) / 4L + mp::sqrt(nr) * 2L;
  return ak_coefficient(n, prec).log - log_b;
}

/// sum m^{-1/4} e^{2m^{3/2} - (m+1)^3 t} / sum m^{-1/4} e^{2m^{3/2} - m^3 t}.
inline Real ak_gsum_ratio(const Real& t, const PrecisionContext& ctx) {
  const Real num = detail::ak_log_sum(t, ctx, [&](long m, mp::Prec p) { return detail::ak_gterm(m, m + 1, Real(t, p), p); });
  const Real den = detail::ak_log_sum(t, ctx, [&](long m, mp::Prec p) { return detail::ak_gterm(m, m, Real(t, p), p); });
  return Real(mp::exp(num - den), ctx.prec());
}

}  // namespace emlab
