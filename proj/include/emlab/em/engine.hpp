#pragma once

#include <utility>

#include "emlab/em/expansion.hpp"
#include "emlab/em/function_model.hpp"
#include "emlab/special/bernoulli.hpp"
#include "emlab/special/digamma.hpp"
#include "emlab/special/euler.hpp"

namespace emlab {

namespace detail {
inline mpq_class factorial_q(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return mpq_class(f);
}
}  // namespace detail

/// Lattice dimensions with an implemented expansion.
inline void require_dimension(unsigned s) {
  if (s == 1 || s == 2) return;
  fail(ErrorKind::Unsupported, "expansions are implemented for one and two summation indices only, got " + std::to_string(s));
}

/// sum_{m>=0} f(w(m+a)) ~ (1/w) int f - sum_{n<N} B_{n+1}(a) b_n/(n+1) w^n.
inline ExpansionSeries expand_regular(const FunctionModel& f, const mpq_class& a, unsigned N) {
  if (f.has_pole) fail(ErrorKind::Domain, f.name + " has a pole; use expand_pole");
  f.require_taylor(N);
  ExpansionSeries s;
  s.kind = ExpansionKind::Regular;
  s.order = N;
  s.inv[1] = f.integral;
  for (unsigned n = 0; n < N; ++n) {
    const mpq_class c = -bernoulli_poly(n + 1, a) / (n + 1);
    s.poly.push_back(Scalar(c) * f.laurent[n]);
  }
  return s;
}

/// C_a, exact for positive integers (C_n = -H_{n-1}).
inline Scalar digamma_constant_scalar(const mpq_class& a, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(a)) fail(ErrorKind::PoleShift, "shift a = " + a.get_str() + " lies in -N0");
  if (a.get_den() == 1 && a.get_num().fits_ulong_p()) {
    mpq_class h = 0;
    for (unsigned long k = 1; k < a.get_num().get_ui(); ++k) h += mpq_class(1, k);
    return Scalar(mpq_class(-h));
  }
  return Scalar(digamma_constant(a, ctx));
}

/// Simple-pole kernel f = b_{-1}/w + sum b_n w^n:
/// b_{-1} Log(1/w)/w + (b_{-1} C_a + int [f - b_{-1} e^{-x}/x]) / w - sum_{n<N} B_{n+1}(a) b_n/(n+1) w^n.
inline ExpansionSeries expand_pole(const FunctionModel& f, const mpq_class& a, unsigned N,
                                   const PrecisionContext& ctx = {}) {
  if (!f.has_pole || f.residue.is_zero()) fail(ErrorKind::InsufficientPole, f.name + " has no simple pole at the origin");
  if (is_nonpositive_integer(a)) fail(ErrorKind::PoleShift, "shift a = " + a.get_str() + " lies in -N0");
  f.require_taylor(N);
  ExpansionSeries s;
  s.kind = ExpansionKind::Pole;
  s.order = N;
  s.log_over_w = f.residue;
  s.inv[1] = f.residue * digamma_constant_scalar(a, ctx) + f.integral;
  for (unsigned n = 0; n < N; ++n) {
    const mpq_class c = -bernoulli_poly(n + 1, a) / (n + 1);
    s.poly.push_back(Scalar(c) * f.laurent[n]);
  }
  return s;
}

/// sum_{m>=0} (-1)^m f(w(m+a)) ~ (1/2) sum_{n<N} E_n(a) b_n w^n.
inline ExpansionSeries expand_alternating(const FunctionModel& f, const mpq_class& a, unsigned N) {
  if (f.has_pole) fail(ErrorKind::Domain, f.name + " has a pole; alternating expansion needs a regular kernel");
  f.require_taylor(N);
  ExpansionSeries s;
  s.kind = ExpansionKind::Alternating;
  s.order = N;
  for (unsigned n = 0; n < N; ++n) {
    const mpq_class c = euler_poly(n, a) / 2;
    s.poly.push_back(Scalar(c) * f.laurent[n]);
  }
  return s;
}

/// Two-index expansion, term for term as in the unpacked two-dimensional display:
/// (1/w^2) int int f
/// - (1/w) sum_{n1<N} B_{n1+1}(a1)/(n1+1)! w^{n1} int f^{(n1,0)}(0,x2) dx2
/// - (1/w) sum_{n2<N} B_{n2+1}(a2)/(n2+1)! w^{n2} int f^{(0,n2)}(x1,0) dx1
/// + sum_{n1+n2<N} B_{n1+1}(a1) B_{n2+1}(a2) f^{(n1,n2)}(0)/((n1+1)!(n2+1)!) w^{n1+n2}.
inline ExpansionSeries expand_2d(const FunctionModel2D& f, const std::pair<mpq_class, mpq_class>& a, unsigned N) {
  f.require_order(N);
  ExpansionSeries s;
  s.kind = ExpansionKind::TwoDim;
  s.order = N;
  s.inv[2] = f.integral;
  s.inv[1] = Scalar(0);
  s.poly.assign(N, Scalar(0));

  auto edge = [&](const mpq_class& shift, const std::vector<Scalar>& integrals) {
    for (unsigned n = 0; n < N; ++n) {
      const Scalar c = Scalar(mpq_class(-bernoulli_poly(n + 1, shift) / detail::factorial_q(n + 1))) * integrals[n];
      if (n == 0) {
        s.inv[1] += c;
      } else {
        s.poly[n - 1] += c;
      }
    }
  };
  edge(a.first, f.edge_x2);
  edge(a.second, f.edge_x1);

  for (unsigned n1 = 0; n1 < N; ++n1) {
    const mpq_class b1 = bernoulli_poly(n1 + 1, a.first) / detail::factorial_q(n1 + 1);
    for (unsigned n2 = 0; n1 + n2 < N; ++n2) {
      const mpq_class b2 = bernoulli_poly(n2 + 1, a.second) / detail::factorial_q(n2 + 1);
      s.poly[n1 + n2] += Scalar(mpq_class(b1 * b2)) * f.taylor[n1][n2];
    }
  }
  return s;
}

}  // namespace emlab
