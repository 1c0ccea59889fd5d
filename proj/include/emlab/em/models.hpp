#pragma once

// Built-in kernels with closed-form Taylor data and integrals.

#include "emlab/em/function_model.hpp"
#include "emlab/special/bernoulli.hpp"

namespace emlab::models {

inline constexpr unsigned kDefaultTaylorLength = 64;

inline mpq_class inverse_factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return {1, f};
}

/// e^{-c x} for rational c > 0.
inline FunctionModel exp_scaled(const mpq_class& c, unsigned taylor_length = kDefaultTaylorLength) {
  if (sgn(c) <= 0) fail(ErrorKind::Domain, "decay rate c must be positive");
  FunctionModel m;
  m.name = c == 1 ? "exp" : "exp(" + c.get_str() + ")";
  m.evaluate = [c](const Complex& w) { return mp::exp(-(w * Real(c, w.prec()))); };
  mpq_class power = 1;
  for (unsigned n = 0; n < taylor_length; ++n) {
    m.laurent.emplace_back(mpq_class(power * inverse_factorial(n)));
    power *= -c;
  }
  m.integral = Scalar(mpq_class(1 / c));
  m.decay = {0.0, c.get_d(), 1.0, 0.0};
  return m;
}

/// e^{-x}.
inline FunctionModel exp(unsigned taylor_length = kDefaultTaylorLength) { return exp_scaled(1, taylor_length); }

/// e^{-x}/x: residue 1, b_n = (-1)^{n+1}/(n+1)!, regularized integral 0.
inline FunctionModel exp_over_x(unsigned taylor_length = kDefaultTaylorLength) {
  FunctionModel m;
  m.name = "exp-over-x";
  m.evaluate = [](const Complex& w) { return mp::exp(-w) / w; };
  m.has_pole = true;
  m.residue = Scalar(1);
  for (unsigned n = 0; n < taylor_length; ++n) {
    mpq_class b = inverse_factorial(n + 1);
    if (n % 2 == 0) b = -b;
    m.laurent.emplace_back(b);
  }
  m.integral = Scalar(0);
  m.decay = {1.0, 1.0, 1.0, 0.0};
  return m;
}

/// w^3 e^{-w}/(1 - e^{-w}) = w^3/(e^w - 1), the kernel whose shifted sum at a = 1
/// is w^3 g_3(e^{-w}). b_n = B_{n-2}/(n-2)! and the integral is Gamma(4) zeta(4) = pi^4/15.
inline FunctionModel eisenstein_kernel(mp::Prec integral_prec = 512, unsigned taylor_length = kDefaultTaylorLength) {
  FunctionModel m;
  m.name = "eisenstein-kernel";
  m.evaluate = [](const Complex& w) {
    if (w.is_zero()) return Complex(w.prec());
    return mp::pow(w, 3) / mp::expm1(w);
  };
  for (unsigned n = 0; n < taylor_length; ++n) {
    if (n < 2) {
      m.laurent.emplace_back(0);
    } else {
      m.laurent.emplace_back(mpq_class(bernoulli_number(n - 2) * inverse_factorial(n - 2)));
    }
  }
  Real pi4 = mp::pow(mp::pi(integral_prec), 4L);
  m.integral = Scalar(Real(pi4 / 15L));
  // |e^w - 1| >= e^{Re w}/2 once Re w >= ln 2.
  m.decay = {-3.0, 1.0, 2.0, 0.7};
  return m;
}

/// e^{-c1 x1 - c2 x2} as a separable two-variable model.
inline FunctionModel2D exp2d(const mpq_class& c1, const mpq_class& c2, unsigned taylor_length = 32) {
  FunctionModel2D m = separable(exp_scaled(c1, taylor_length), exp_scaled(c2, taylor_length));
  m.name = "exp2d(" + c1.get_str() + "," + c2.get_str() + ")";
  return m;
}

}  // namespace emlab::models
