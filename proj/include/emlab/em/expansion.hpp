#pragma once

#include <map>
#include <vector>

#include "emlab/errors.hpp"
#include "emlab/numerics/precision.hpp"
#include "emlab/numerics/scalar.hpp"
#include "emlab/numerics/sector.hpp"

namespace emlab {

enum class ExpansionKind { Regular, Pole, Alternating, TwoDim };

inline const char* to_string(ExpansionKind k) {
  switch (k) {
    case ExpansionKind::Regular: return "regular";
    case ExpansionKind::Pole: return "pole";
    case ExpansionKind::Alternating: return "alternating";
    case ExpansionKind::TwoDim: return "2d";
  }
  return "?";
}

/// log_over_w * Log(1/w)/w + sum_s inv[s] w^{-s} + sum_{n<order} poly[n] w^n.
struct ExpansionSeries {
  ExpansionKind kind = ExpansionKind::Regular;
  Scalar log_over_w;
  std::map<int, Scalar> inv;
  std::vector<Scalar> poly;
  unsigned order = 0;

  [[nodiscard]] Scalar inv_coeff(int s) const {
    auto it = inv.find(s);
    return it == inv.end() ? Scalar(0) : it->second;
  }
};

/// Evaluates the truncated series at w with Re w > 0; Log(1/w) is taken as -Log w.
inline Complex eval_expansion(const ExpansionSeries& series, const Complex& w, const PrecisionContext& ctx) {
  if (w.is_zero()) fail(ErrorKind::Domain, "expansion evaluated at w = 0");
  if (!(w.re.sign() > 0)) fail(ErrorKind::Domain, "expansion requires Re w > 0");
  const mp::Prec g = ctx.prec() + 16;
  const Complex z(Real(w.re, g), Real(w.im, g));

  Complex poly(g);
  for (auto it = series.poly.rbegin(); it != series.poly.rend(); ++it) {
    poly *= z;
    poly += Complex(it->to_real(g));
  }

  const Complex inv_w = Complex(Real(1L, g)) / z;
  Complex out = poly;
  for (const auto& [s, c] : series.inv) {
    if (c.is_zero()) continue;
    out += mp::pow(inv_w, s) * c.to_real(g);
  }
  if (!series.log_over_w.is_zero()) {
    out -= mp::log(z) * inv_w * series.log_over_w.to_real(g);
  }
  return {Real(out.re, ctx.prec()), Real(out.im, ctx.prec())};
}

inline Complex eval_expansion(const ExpansionSeries& series, const SectorPoint& w, const PrecisionContext& ctx) {
  return eval_expansion(series, w.value(), ctx);
}

}  // namespace emlab
