#pragma once

// Log-domain complex values: (log|z|, Arg z). Quantities such as e^{pi^2/(6z)}
// at z = 1e-5 live here long before they could be materialized.

#include <span>
#include <vector>

#include "emlab/errors.hpp"
#include "emlab/numerics/complex.hpp"
#include "emlab/numerics/precision.hpp"

namespace emlab {

using mp::Complex;
using mp::Real;

/// Reduces an angle into (-pi, pi].
inline Real normalize_arg(const Real& theta) {
  if (!theta.is_finite()) fail(ErrorKind::Domain, "non-finite argument");
  const mp::Prec p = theta.prec() + 16;
  const Real two_pi = mp::pi(p) * 2L;
  Real t(theta, p);
  Real k = mp::floor(t / two_pi + Real(0.5, p));
  t -= k * two_pi;
  const Real pi = mp::pi(p);
  if (t <= -pi) t += two_pi;
  if (t > pi) t -= two_pi;
  Real out(t, theta.prec());
  // Rounding can land a hair outside the interval; pin it to the endpoint.
  const Real pi_out = mp::pi(theta.prec());
  if (out > pi_out || out <= -pi_out) out = pi_out;
  return out;
}

struct LogComplex {
  Real log_mag;  // -inf encodes zero
  Real arg;      // (-pi, pi]

  LogComplex() = default;
  LogComplex(Real lm, Real a) : log_mag(std::move(lm)), arg(std::move(a)) {
    if (log_mag.is_inf() && log_mag.sign() < 0) {
      arg = Real(arg.prec());
    } else {
      arg = normalize_arg(arg);
    }
  }

  static LogComplex zero(mp::Prec prec) { return {mp::infinity(prec, -1), Real(prec)}; }

  /// From a positive real stored as its natural log.
  static LogComplex from_log_real(Real log_value) {
    const mp::Prec p = log_value.prec();
    return {std::move(log_value), Real(p)};
  }

  /// From a complex logarithm L, i.e. the value e^L.
  static LogComplex from_log(const Complex& L) { return {L.re, L.im}; }

  static LogComplex from_complex(const Complex& z) {
    if (z.is_zero()) return zero(z.prec());
    return {mp::log(mp::abs(z)), mp::arg(z)};
  }

  [[nodiscard]] mp::Prec prec() const { return log_mag.prec(); }
  [[nodiscard]] bool is_zero() const { return log_mag.is_inf() && log_mag.sign() < 0; }

  /// e^{log_mag + i arg}; refused if the magnitude leaves MPFR's exponent range.
  [[nodiscard]] Complex to_complex() const {
    const mp::Prec p = prec();
    if (is_zero()) return Complex(p);
    const double lm = log_mag.to_double();
    const double lim = static_cast<double>(mpfr_get_emax() - 2) * std::log(2.0);
    const double low = static_cast<double>(mpfr_get_emin() + 2) * std::log(2.0);
    if (!(lm < lim && lm > low)) fail(ErrorKind::Range, "magnitude outside representable range");
    Real m = mp::exp(log_mag);
    Real s(p), c(p);
    mp::sin_cos(s, c, arg);
    return {m * c, m * s};
  }

  /// Conversion to double precision; refused outside the double range.
  [[nodiscard]] std::pair<double, double> to_double() const {
    if (is_zero()) return {0.0, 0.0};
    const double lm = log_mag.to_double();
    if (!(lm < 709.0 && lm > -708.0)) fail(ErrorKind::Range, "magnitude outside double range");
    const Complex z = to_complex();
    return {z.re.to_double(), z.im.to_double()};
  }

  [[nodiscard]] Complex log() const { return {log_mag, arg}; }

  friend LogComplex operator*(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero() || b.is_zero()) return zero(std::max(a.prec(), b.prec()));
    return {a.log_mag + b.log_mag, a.arg + b.arg};
  }
  friend LogComplex operator/(const LogComplex& a, const LogComplex& b) {
    if (b.is_zero()) fail(ErrorKind::Domain, "division by zero in log domain");
    if (a.is_zero()) return zero(a.prec());
    return {a.log_mag - b.log_mag, a.arg - b.arg};
  }
};

/// Unit vector e^{i theta}, exact for theta in {0, pi}.
inline Complex unit_phase(const Real& theta, mp::Prec p) {
  if (theta.is_zero()) return {Real(1L, p), Real(p)};
  if (theta == mp::pi(theta.prec())) return {Real(-1L, p), Real(p)};
  Real s(p), c(p);
  mp::sin_cos(s, c, Real(theta, p));
  return {std::move(c), std::move(s)};
}

/// Sum of log-domain terms by factoring out the largest magnitude. Terms are
/// accumulated in index order with 32 guard bits.
inline LogComplex log_sum_exp(std::span<const LogComplex> terms, const PrecisionContext& ctx) {
  if (terms.empty()) fail(ErrorKind::Domain, "log_sum_exp of an empty sequence");
  const mp::Prec p = ctx.prec();
  const mp::Prec g = p + 32;
  const LogComplex* top = nullptr;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    if (top == nullptr || t.log_mag > top->log_mag) top = &t;
  }
  if (top == nullptr) return LogComplex::zero(p);
  const Real M(top->log_mag, g);
  Complex acc(g);
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    Real scale = mp::exp(Real(t.log_mag, g) - M);
    Complex u = unit_phase(t.arg, g);
    u *= scale;
    acc += u;
  }
  if (acc.is_zero()) return LogComplex::zero(p);
  Real lm(M + mp::log(mp::abs(acc)), p);
  Real a(mp::arg(acc), p);
  return {std::move(lm), std::move(a)};
}

inline LogComplex log_sum_exp(const std::vector<LogComplex>& terms, const PrecisionContext& ctx) {
  return log_sum_exp(std::span<const LogComplex>(terms), ctx);
}

/// e^z - 1 at the context precision, accurate for |z| << 1.
inline Complex expm1_complex(const Complex& z, const PrecisionContext& ctx) {
  const mp::Prec p = ctx.prec();
  Complex zz(Real(z.re, p + 16), Real(z.im, p + 16));
  Complex r = mp::expm1(zz);
  return {Real(r.re, p), Real(r.im, p)};
}

/// Non-negative real in log form (log = -inf encodes zero).
struct LogReal {
  Real log;

  static LogReal zero(mp::Prec p) { return {mp::infinity(p, -1)}; }
  [[nodiscard]] bool is_zero() const { return log.is_inf() && log.sign() < 0; }
  [[nodiscard]] Real value() const { return mp::exp(log); }
  [[nodiscard]] double to_double() const { return is_zero() ? 0.0 : std::exp(log.to_double()); }
  [[nodiscard]] LogComplex as_complex() const { return LogComplex::from_log_real(log); }
};

}  // namespace emlab
