#pragma once

// Coefficient and partial-sum asymptotics for generating functions growing like
// lambda Log(1/z)^alpha z^beta e^{gamma/z}, in log form.

#include "emlab/errors.hpp"
#include "emlab/numerics/log_complex.hpp"

namespace emlab {

struct InghamParams {
  Real lambda;
  Real alpha;
  Real beta;
  Real gamma;

  void validate() const {
    if (lambda.sign() < 0) fail(ErrorKind::Domain, "lambda must be non-negative");
    if (!(gamma.sign() > 0)) fail(ErrorKind::Domain, "gamma must be positive");
  }

  /// lambda = (2 pi)^{-1/2}, alpha = 0, beta = 1/2, gamma = pi^2/6, from P(e^{-z}) ~ sqrt(z/2pi) e^{pi^2/(6z)}.
  static InghamParams partition(mp::Prec prec) {
    const Real pi = mp::pi(prec);
    return {Real(1L, prec) / mp::sqrt(pi * 2L), Real(prec), Real(0.5, prec), pi * pi / 6L};
  }
};

namespace detail {

/// lambda gamma^{g} (log n)^alpha / (2^{alpha+1} sqrt(pi) n^{e}) e^{2 sqrt(gamma n)} in log form.
inline LogReal ingham_shape(const InghamParams& p, const Real& n, const Real& gamma_exp, const Real& n_exp) {
  p.validate();
  const mp::Prec prec = std::max(n.prec(), p.gamma.prec());
  if (!(n >= Real(2L, prec))) fail(ErrorKind::Domain, "asymptotic formulas need n >= 2");
  if (p.lambda.is_zero()) return LogReal::zero(prec);
  const Real ln = mp::log(n);
  Real out = mp::log(p.lambda) + gamma_exp * mp::log(p.gamma);
  if (!p.alpha.is_zero()) out += p.alpha * mp::log(ln);
  out -= (p.alpha + 1L) * mp::ln2(prec);
  out -= mp::log(mp::pi(prec)) / 2L;
  out -= n_exp * ln;
  out += mp::sqrt(p.gamma * n) * 2L;
  return {out};
}
}  // namespace detail

/// b_n ~ lambda gamma^{beta/2+1/4} (log n)^alpha / (2^{alpha+1} sqrt(pi) n^{beta/2+3/4}) e^{2 sqrt(gamma n)}.
inline LogReal ingham_coefficient_asymptotic(const InghamParams& p, const Real& n) {
  return detail::ingham_shape(p, n, p.beta / 2L + 0.25, p.beta / 2L + 0.75);
}

/// sum_{n<=N} b_n ~ lambda gamma^{beta/2-1/4} (log N)^alpha / (2^{alpha+1} sqrt(pi) N^{beta/2+1/4}) e^{2 sqrt(gamma N)}.
inline LogReal ingham_partial_sum_asymptotic(const InghamParams& p, const Real& N) {
  return detail::ingham_shape(p, N, p.beta / 2L - 0.25, p.beta / 2L + 0.25);
}

/// phi(z) = gamma/z, chi(z) = lambda Log(1/z)^alpha z^beta, psi(x) = sqrt(gamma/x).
struct GrowthProfile {
  InghamParams params;

  [[nodiscard]] Real phi(const Real& z) const { return params.gamma / z; }
  [[nodiscard]] Real dphi(const Real& z) const { return -(params.gamma / (z * z)); }
  [[nodiscard]] Real ddphi(const Real& z) const { return params.gamma * 2L / (z * z * z); }
  [[nodiscard]] Real psi(const Real& x) const { return mp::sqrt(params.gamma / x); }

  /// log chi(z) for 0 < z; Log(1/z)^alpha needs z < 1 unless alpha = 0.
  [[nodiscard]] Real log_chi(const Real& z) const {
    Real out = mp::log(params.lambda) + params.beta * mp::log(z);
    if (!params.alpha.is_zero()) {
      const Real l = -mp::log(z);
      if (!(l.sign() > 0)) fail(ErrorKind::Domain, "Log(1/psi(x))^alpha needs psi(x) < 1");
      out += params.alpha * mp::log(l);
    }
    return out;
  }
};

/// A(x) ~ chi(psi) e^{phi(psi) + x psi} / (psi sqrt(2 pi phi''(psi))) with psi = psi(x).
inline LogReal ingham_general_A(const GrowthProfile& prof, const Real& x) {
  prof.params.validate();
  const mp::Prec prec = std::max(x.prec(), prof.params.gamma.prec());
  if (!(x.sign() > 0)) fail(ErrorKind::Domain, "x must be positive");
  if (prof.params.lambda.is_zero()) return LogReal::zero(prec);
  const Real s = prof.psi(x);
  Real out = prof.log_chi(s) + prof.phi(s) + x * s;
  out -= mp::log(s);
  out -= mp::log(mp::pi(prec) * 2L * prof.ddphi(s)) / 2L;
  return {out};
}

}  // namespace emlab
