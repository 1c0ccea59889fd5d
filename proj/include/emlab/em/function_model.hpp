#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "emlab/errors.hpp"
#include "emlab/numerics/complex.hpp"
#include "emlab/numerics/scalar.hpp"

namespace emlab {

using mp::Complex;
using mp::Real;

/// |f(w)| <= constant * |w|^{-power} * exp(-rate * Re w) whenever Re w >= radius.
struct DecayCertificate {
  double power = 2.0;
  double rate = 0.0;
  double constant = 1.0;
  double radius = 0.0;

  /// Summable along any ray of a sector: exponential decay, or a power above 1.
  [[nodiscard]] bool summable() const { return rate > 0.0 || power > 1.0; }

  /// log of the bound at a point with modulus r and real part x.
  [[nodiscard]] double log_bound(double r, double x) const {
    return std::log(constant) - power * std::log(r) - rate * x;
  }
};

/// One-variable kernel f for sums over f(w(m+a)).
///
/// `laurent` holds b_0, b_1, ... (the Taylor coefficients f^{(n)}(0)/n!) and
/// `residue` holds b_{-1}; the latter is zero unless `has_pole`.
/// `integral` is the full integral over (0, inf) for regular models and the
/// integral of f(x) - b_{-1} e^{-x}/x for pole models.
struct FunctionModel {
  std::string name;
  std::function<Complex(const Complex&)> evaluate;
  Scalar residue;
  std::vector<Scalar> laurent;
  bool has_pole = false;
  Scalar integral;
  DecayCertificate decay;
  double sector_half_angle = 1.5;

  /// f^{(n)}(0) = n! b_n.
  [[nodiscard]] Scalar derivative_at_zero(unsigned n) const {
    if (n >= laurent.size()) fail(ErrorKind::InsufficientTaylorData, name + ": no Taylor coefficient of order " + std::to_string(n));
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return laurent[n] * Scalar(mpq_class(f));
  }

  void require_taylor(unsigned N) const {
    if (laurent.size() < N)
      fail(ErrorKind::InsufficientTaylorData,
           name + ": " + std::to_string(laurent.size()) + " Taylor coefficients supplied, " + std::to_string(N) + " needed");
  }
};

/// |f(w1, w2)| <= constant * prod_j (1 + |w_j|)^{-power_j} exp(-rate_j Re w_j) on the product sector.
struct DecayCertificate2D {
  double power[2] = {0.0, 0.0};
  double rate[2] = {1.0, 1.0};
  double constant = 1.0;

  [[nodiscard]] double log_axis(int j, double r, double x) const {
    return -power[j] * std::log1p(r) - rate[j] * x;
  }
};

/// Two-variable kernel with the data consumed by the two-dimensional expansion.
///
/// taylor[n1][n2] = f^{(n1,n2)}(0,0) (derivatives, not Taylor coefficients).
/// edge_x2[n1] = integral over x2 of f^{(n1,0)}(0, x2); edge_x1[n2] likewise
/// in x1 for f^{(0,n2)}(x1, 0).
struct FunctionModel2D {
  std::string name;
  std::function<Complex(const Complex&, const Complex&)> evaluate;
  std::vector<std::vector<Scalar>> taylor;
  std::vector<Scalar> edge_x2;
  std::vector<Scalar> edge_x1;
  Scalar integral;
  DecayCertificate2D decay;
  double sector_half_angle[2] = {1.5, 1.5};

  void require_order(unsigned N) const {
    bool ok = edge_x2.size() >= N && edge_x1.size() >= N && taylor.size() >= N;
    for (unsigned n1 = 0; ok && n1 < N; ++n1) ok = taylor[n1].size() >= N - n1;
    if (!ok) fail(ErrorKind::InsufficientTaylorData, name + ": two-variable data incomplete for order " + std::to_string(N));
  }
};

/// f(x1, x2) = g(x1) h(x2) from two regular one-variable models; every stored
/// quantity is the product of the factors' data.
inline FunctionModel2D separable(const FunctionModel& g, const FunctionModel& h) {
  if (g.has_pole || h.has_pole) fail(ErrorKind::Domain, "separable factors must be regular");
  // |w|^{-p} <= (1 + |w|)^{-p} only for p <= 0, and only a global bound carries over.
  for (const auto* f : {&g, &h}) {
    if (f->decay.power > 0.0 || f->decay.radius > 0.0 || !(f->decay.rate > 0.0))
      fail(ErrorKind::Domain, f->name + ": separable factors need a global exponential decay certificate");
  }
  const std::size_t K = std::min(g.laurent.size(), h.laurent.size());
  FunctionModel2D m;
  m.name = g.name + "*" + h.name;
  auto ge = g.evaluate;
  auto he = h.evaluate;
  m.evaluate = [ge, he](const Complex& u, const Complex& v) { return ge(u) * he(v); };
  m.taylor.resize(K);
  for (std::size_t n1 = 0; n1 < K; ++n1) {
    for (std::size_t n2 = 0; n1 + n2 < K; ++n2) {
      m.taylor[n1].push_back(g.derivative_at_zero(static_cast<unsigned>(n1)) *
                             h.derivative_at_zero(static_cast<unsigned>(n2)));
    }
  }
  for (std::size_t n = 0; n < K; ++n) {
    m.edge_x2.push_back(g.derivative_at_zero(static_cast<unsigned>(n)) * h.integral);
    m.edge_x1.push_back(g.integral * h.derivative_at_zero(static_cast<unsigned>(n)));
  }
  m.integral = g.integral * h.integral;
  m.decay.constant = g.decay.constant * h.decay.constant;
  m.decay.power[0] = g.decay.power;
  m.decay.power[1] = h.decay.power;
  m.decay.rate[0] = g.decay.rate;
  m.decay.rate[1] = h.decay.rate;
  m.sector_half_angle[0] = g.sector_half_angle;
  m.sector_half_angle[1] = h.sector_half_angle;
  return m;
}

}  // namespace emlab
