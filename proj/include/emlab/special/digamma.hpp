#pragma once

#include <cmath>

#include "emlab/errors.hpp"
#include "emlab/numerics/precision.hpp"
#include "emlab/special/bernoulli.hpp"

namespace emlab {

inline bool is_nonpositive_integer(const mpq_class& a) { return a.get_den() == 1 && sgn(a) <= 0; }

/// C_a = (1-a) sum_{m>=0} 1/((m+a)(m+1)), the constant of the simple-pole expansion.
///
/// The series converges like 1/M, so the first M terms are summed directly and
/// the tail sum_{m>=M} [1/(m+a) - 1/(m+1)] is replaced by its Euler-Maclaurin
/// expansion at M:
///   log((M+1)/(M+a)) + (1/2)[1/(M+a) - 1/(M+1)] + sum_k B_2k/(2k) [(M+a)^-2k - (M+1)^-2k].
/// M is taken large enough that the Bernoulli terms reach 2^-(bits+16)
/// before they start to grow.
inline Real digamma_constant(const mpq_class& a, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(a)) fail(ErrorKind::PoleShift, "C_a is undefined for a in -N0");
  const mp::Prec p = ctx.prec();
  if (a == 1) return Real(p);
  const mp::Prec g = p + 32;
  const Real ar(a, g);

  // e^{-2 pi (M+a)} < 2^{-(bits+16)}
  const double abs_a = std::fabs(a.get_d());
  const long M = static_cast<long>(std::ceil(0.125 * static_cast<double>(ctx.bits + 16))) +
                 static_cast<long>(std::ceil(2.0 * abs_a)) + 8;

  const Real one_minus_a = Real(1L, g) - ar;
  Real head(g);
  for (long m = 0; m < M; ++m) {
    Real ma = ar + m;
    Real t = one_minus_a / (ma * Real(m + 1, g));
    head += t;
  }

  const Real x = ar + M;         // M + a
  const Real y(M + 1, g);        // M + 1
  Real tail = mp::log(y / x);
  tail += (Real(1L, g) / x - Real(1L, g) / y) / 2L;

  const Real inv_x2 = Real(1L, g) / (x * x);
  const Real inv_y2 = Real(1L, g) / (y * y);
  Real px = inv_x2, py = inv_y2;
  const double threshold = -static_cast<double>(ctx.bits + 16) * std::log(2.0);
  const double x_d = x.to_double();
  for (unsigned k = 1;; ++k) {
    Real coeff(bernoulli_number(2 * k), g);
    coeff /= static_cast<long>(2 * k);
    Real term = coeff * (px - py);
    tail += term;
    if (term.is_zero() || term.log_abs() < threshold + head.log_abs()) break;
    // Asymptotic series: stop before the terms turn around.
    if (static_cast<double>(2 * k + 2) > 2.0 * M_PI * x_d) break;
    px *= inv_x2;
    py *= inv_y2;
  }
  return Real(head + tail, p);
}

/// Reference value -gamma - psi(a) from MPFR's digamma.
inline Real digamma_constant_reference(const mpq_class& a, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(a)) fail(ErrorKind::PoleShift, "psi has a pole at a in -N0");
  const mp::Prec g = ctx.prec() + 32;
  Real r = -mp::euler_gamma(g) - mp::digamma(Real(a, g));
  return Real(r, ctx.prec());
}

}  // namespace emlab
