#pragma once

// Direct evaluation of sum_m f(w(m+a)) and its alternating and two-index
// variants. Truncation is driven by the decay certificates only.

#include <cmath>
#include <limits>
#include <utility>

#include "emlab/em/function_model.hpp"
#include "emlab/numerics/precision.hpp"
#include "emlab/numerics/sector.hpp"

namespace emlab {

struct LatticeSum {
  Complex value;
  /// Absolute bound on |value - exact sum|: certified tail plus accumulated rounding.
  double error_bound = 0.0;
  std::uint64_t terms = 0;
};

namespace detail {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

/// log of sum_{t = t0, t0+1, ...} C (r t)^{-p} e^{-kappa x t}, bounded by a
/// geometric ratio or, without exponential decay, by the power integral.
inline double log_tail_bound(const DecayCertificate& d, double r, double x, double t0) {
  const double first = d.log_bound(r * t0, x * t0);
  double best = std::numeric_limits<double>::infinity();
  if (d.rate > 0.0 && x > 0.0) {
    double log_ratio = -d.rate * x;
    if (d.power < 0.0) log_ratio += -d.power * std::log1p(1.0 / t0);
    if (log_ratio < 0.0) best = first - std::log(-std::expm1(log_ratio));
  }
  if (d.power > 1.0) {
    const double integral = std::log(d.constant) - d.power * std::log(r) + (1.0 - d.power) * std::log(t0) - std::log(d.power - 1.0);
    best = std::min(best, log_add(first, integral));
  }
  return best;
}

inline void check_in_sector(const SectorPoint& w, double half_angle, const std::string& name) {
  const double arg = std::fabs(mp::arg(w.value()).to_double());
  if (arg > half_angle + 1e-12) fail(ErrorKind::Domain, "w lies outside the sector of " + name);
}

inline double log_rounding(std::uint64_t terms, double log_abs_sum, mp::Prec g) {
  return log_abs_sum + std::log(static_cast<double>(terms) + 1.0) - static_cast<double>(g) * std::log(2.0);
}

template <typename Sign>
LatticeSum one_dim_sum(const FunctionModel& f, const SectorPoint& w, const mpq_class& a, const PrecisionContext& ctx,
                       Sign sign) {
  ctx.validate();
  check_in_sector(w, f.sector_half_angle, f.name);
  if (!f.decay.summable()) fail(ErrorKind::Domain, f.name + ": decay certificate does not make the sum converge");
  if (f.has_pole && a.get_den() == 1 && sgn(a) <= 0) fail(ErrorKind::PoleShift, "a term of the sum sits on the pole");

  const mp::Prec g = ctx.prec() + 32;
  const Complex wg(Real(w.value().re, g), Real(w.value().im, g));
  const double r = mp::abs(w.value()).to_double();
  const double x = w.value().re.to_double();
  const double ad = a.get_d();
  const double log_tol = std::log(ctx.tail_tol);
  // Early terms with m + a <= 0 (or inside the certificate radius) are summed unconditionally.
  const double m_free = std::max(std::ceil(-ad) + 1.0, x > 0.0 ? std::ceil(f.decay.radius / x - ad) : 0.0);

  Complex acc(g);
  double log_abs_sum = kNegInf;
  const Real ar(a, g);
  for (std::uint64_t m = 0;; ++m) {
    if (m >= ctx.max_terms) fail(ErrorKind::SlowConvergence, f.name + ": max_terms reached before the tail bound was met");
    Complex arg = wg * (ar + static_cast<long>(m));
    Complex term = f.evaluate(arg);
    if (sign(m)) {
      acc -= term;
    } else {
      acc += term;
    }
    log_abs_sum = log_add(log_abs_sum, mp::log_abs(term));
    if (static_cast<double>(m) < m_free) continue;
    const double t0 = static_cast<double>(m + 1) + ad;
    const double log_tail = log_tail_bound(f.decay, r, x, t0);
    const double log_acc = mp::log_abs(acc);
    if (log_tail <= log_tol + std::max(log_acc, log_rounding(1, log_abs_sum, g))) {
      LatticeSum out;
      out.value = Complex(Real(acc.re, ctx.prec()), Real(acc.im, ctx.prec()));
      out.terms = m + 1;
      out.error_bound = std::exp(log_tail) + std::exp(log_rounding(m + 1, log_abs_sum, ctx.prec()));
      return out;
    }
  }
}

}  // namespace detail

/// sum_{m>=0} f(w(m+a)).
inline LatticeSum shifted_sum(const FunctionModel& f, const SectorPoint& w, const mpq_class& a, const PrecisionContext& ctx) {
  return detail::one_dim_sum(f, w, a, ctx, [](std::uint64_t) { return false; });
}

/// sum_{m>=0} (-1)^m f(w(m+a)), accumulated pairwise as [f(w(2j+a)) - f(w(2j+1+a))].
inline LatticeSum alternating_sum(const FunctionModel& f, const SectorPoint& w, const mpq_class& a, const PrecisionContext& ctx) {
  ctx.validate();
  detail::check_in_sector(w, f.sector_half_angle, f.name);
  if (!f.decay.summable()) fail(ErrorKind::Domain, f.name + ": decay certificate does not make the sum converge");
  if (f.has_pole && a.get_den() == 1 && sgn(a) <= 0) fail(ErrorKind::PoleShift, "a term of the sum sits on the pole");

  const mp::Prec g = ctx.prec() + 32;
  const Complex wg(Real(w.value().re, g), Real(w.value().im, g));
  const double r = mp::abs(w.value()).to_double();
  const double x = w.value().re.to_double();
  const double ad = a.get_d();
  const double log_tol = std::log(ctx.tail_tol);
  const double m_free = std::max(std::ceil(-ad) + 1.0, x > 0.0 ? std::ceil(f.decay.radius / x - ad) : 0.0);

  Complex acc(g);
  double log_abs_sum = detail::kNegInf;
  const Real ar(a, g);
  for (std::uint64_t m = 0;; m += 2) {
    if (m >= ctx.max_terms) fail(ErrorKind::SlowConvergence, f.name + ": max_terms reached before the tail bound was met");
    Complex even = f.evaluate(wg * (ar + static_cast<long>(m)));
    Complex odd = f.evaluate(wg * (ar + static_cast<long>(m + 1)));
    log_abs_sum = detail::log_add(log_abs_sum, detail::log_add(mp::log_abs(even), mp::log_abs(odd)));
    even -= odd;
    acc += even;
    if (static_cast<double>(m + 1) < m_free) continue;
    const double t0 = static_cast<double>(m + 2) + ad;
    const double log_tail = detail::log_tail_bound(f.decay, r, x, t0);
    if (log_tail <= log_tol + std::max(mp::log_abs(acc), detail::log_rounding(1, log_abs_sum, g))) {
      LatticeSum out;
      out.value = Complex(Real(acc.re, ctx.prec()), Real(acc.im, ctx.prec()));
      out.terms = m + 2;
      out.error_bound = std::exp(log_tail) + std::exp(detail::log_rounding(m + 2, log_abs_sum, ctx.prec()));
      return out;
    }
  }
}

namespace detail {

struct AxisBound {
  std::uint64_t cutoff = 0;  // last retained index
  double log_full = kNegInf;
  double log_tail = kNegInf;
};

/// Chooses the cutoff M on one axis so that sum_{m>M} g(m) <= rel * sum_{m>=0} g(m),
/// g(m) = (1 + r(m+a))^{-p} e^{-kappa x (m+a)}.
inline AxisBound axis_cutoff(double power, double rate, double r, double x, double a, double log_rel, std::uint64_t max_terms) {
  if (!(rate > 0.0) || !(x > 0.0)) fail(ErrorKind::Domain, "two-index sums need exponential decay on both axes");
  auto log_g = [&](double t) { return -power * std::log1p(r * t) - rate * x * t; };
  auto log_ratio_from = [&](double t) {
    double lr = -rate * x;
    if (power < 0.0) lr += -power * std::log1p(r / (1.0 + r * t));
    return lr;
  };
  AxisBound b;
  double head = kNegInf;
  for (std::uint64_t m = 0;; ++m) {
    if (m >= max_terms) fail(ErrorKind::SlowConvergence, "two-index sum: max_terms reached on one axis");
    const double t = static_cast<double>(m) + a;
    head = log_add(head, log_g(t));
    const double t1 = t + 1.0;
    const double lr = log_ratio_from(t1);
    if (lr >= 0.0) continue;
    const double tail = log_g(t1) - std::log(-std::expm1(lr));
    if (tail <= log_rel + head) {
      b.cutoff = m;
      b.log_full = log_add(head, tail);
      b.log_tail = tail;
      return b;
    }
  }
}

}  // namespace detail

/// sum_{m in N0^2} f(w(m1+a1), w(m2+a2)) over a rectangle [0, M1] x [0, M2].
inline LatticeSum shifted_sum_2d(const FunctionModel2D& f, const SectorPoint& w, const std::pair<mpq_class, mpq_class>& a,
                                 const PrecisionContext& ctx) {
  ctx.validate();
  detail::check_in_sector(w, std::min(f.sector_half_angle[0], f.sector_half_angle[1]), f.name);
  if (sgn(a.first) < 0 || sgn(a.second) < 0) fail(ErrorKind::Domain, "two-index sums need non-negative shifts");

  const double r = mp::abs(w.value()).to_double();
  const double x = w.value().re.to_double();
  const double log_rel = std::log(ctx.tail_tol) - std::log(4.0);
  const auto b1 = detail::axis_cutoff(f.decay.power[0], f.decay.rate[0], r, x, a.first.get_d(), log_rel, ctx.max_terms);
  const auto b2 = detail::axis_cutoff(f.decay.power[1], f.decay.rate[1], r, x, a.second.get_d(), log_rel, ctx.max_terms);
  const double n_terms = static_cast<double>(b1.cutoff + 1) * static_cast<double>(b2.cutoff + 1);
  if (n_terms > static_cast<double>(ctx.max_terms)) fail(ErrorKind::SlowConvergence, f.name + ": rectangle exceeds max_terms");

  const mp::Prec g = ctx.prec() + 32;
  const Complex wg(Real(w.value().re, g), Real(w.value().im, g));
  const Real a1(a.first, g), a2(a.second, g);
  std::vector<Complex> second;
  second.reserve(b2.cutoff + 1);
  for (std::uint64_t m2 = 0; m2 <= b2.cutoff; ++m2) second.push_back(wg * (a2 + static_cast<long>(m2)));

  Complex acc(g);
  double log_abs_sum = detail::kNegInf;
  for (std::uint64_t m1 = 0; m1 <= b1.cutoff; ++m1) {
    const Complex u = wg * (a1 + static_cast<long>(m1));
    for (const auto& v : second) {
      Complex term = f.evaluate(u, v);
      log_abs_sum = detail::log_add(log_abs_sum, mp::log_abs(term));
      acc += term;
    }
  }
  const double log_c = std::log(f.decay.constant);
  const double log_tail = log_c + detail::log_add(b1.log_tail + b2.log_full, b1.log_full + b2.log_tail);
  LatticeSum out;
  out.value = Complex(Real(acc.re, ctx.prec()), Real(acc.im, ctx.prec()));
  out.terms = static_cast<std::uint64_t>(n_terms);
  out.error_bound = std::exp(log_tail) + std::exp(detail::log_rounding(out.terms, log_abs_sum, ctx.prec()));
  return out;
}

}  // namespace emlab
