#pragma once

// Empirical remainder order: slope of log|direct - expansion| against log|w|
// along a ray w = e^{i angle} 2^{-k}.

#include <cmath>
#include <functional>
#include <vector>

#include "emlab/em/engine.hpp"
#include "emlab/lattice/lattice_sums.hpp"

namespace emlab {

struct FitConfig {
  double k_min = 3.0;
  double k_max = 10.0;
  unsigned points = 8;  // geometric spacing in |w|; at least 8
};

struct FitSample {
  double log_abs_w;
  double log_delta;
  bool used;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<FitSample> samples;
};

inline std::vector<double> fit_exponents(const FitConfig& cfg) {
  if (cfg.points < 8) fail(ErrorKind::Domain, "remainder fits need at least 8 sample points");
  if (!(cfg.k_max > cfg.k_min)) fail(ErrorKind::Domain, "empty fit range");
  std::vector<double> ks;
  for (unsigned i = 0; i < cfg.points; ++i)
    ks.push_back(cfg.k_min + (cfg.k_max - cfg.k_min) * static_cast<double>(i) / static_cast<double>(cfg.points - 1));
  return ks;
}

/// Sample point e^{i angle} 2^{-k} as a member of the sector of half-angle `half_angle`.
inline SectorPoint ray_point(double angle, double k, double half_angle, const PrecisionContext& ctx) {
  const mp::Prec p = ctx.prec() + 32;
  Real radius = mp::pow(Real(2L, p), Real(-k, p));
  return SectorPoint::on_ray(radius, Real(angle, p), Real(half_angle, p));
}

/// Least-squares slope over samples whose remainder clears the noise floor
/// 2^{-bits+16} |direct|.
inline FitResult fit_from_samples(const ExpansionSeries& series, const std::vector<SectorPoint>& points,
                                  const std::vector<Complex>& direct, const PrecisionContext& ctx) {
  FitResult out;
  const double floor_log = (16.0 - static_cast<double>(ctx.bits)) * std::log(2.0);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  unsigned n = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Complex approx = eval_expansion(series, points[i], ctx);
    const double delta = mp::log_abs(direct[i] - approx);
    const double lw = mp::log_abs(points[i].value());
    const bool used = std::isfinite(delta) && delta > floor_log + mp::log_abs(direct[i]);
    out.samples.push_back({lw, delta, used});
    if (!used) continue;
    sx += lw;
    sy += delta;
    sxx += lw * lw;
    sxy += lw * delta;
    ++n;
  }
  if (n < 2) fail(ErrorKind::DegenerateFit, "remainder below the noise floor at all but " + std::to_string(n) + " sample points");
  const double d = static_cast<double>(n) * sxx - sx * sx;
  out.slope = (static_cast<double>(n) * sxy - sx * sy) / d;
  out.intercept = (sy - out.slope * sx) / static_cast<double>(n);
  return out;
}

/// Direct sums for a one-variable series kind at the given points.
inline std::vector<Complex> direct_samples(ExpansionKind kind, const FunctionModel& f, const mpq_class& a,
                                           const std::vector<SectorPoint>& points, const PrecisionContext& ctx) {
  std::vector<Complex> out;
  out.reserve(points.size());
  for (const auto& w : points) {
    out.push_back(kind == ExpansionKind::Alternating ? alternating_sum(f, w, a, ctx).value : shifted_sum(f, w, a, ctx).value);
  }
  return out;
}

inline std::vector<SectorPoint> ray_points(double angle, double half_angle, const FitConfig& cfg, const PrecisionContext& ctx) {
  if (std::fabs(angle) > half_angle) fail(ErrorKind::Domain, "ray angle outside the model's sector");
  std::vector<SectorPoint> pts;
  for (double k : fit_exponents(cfg)) pts.push_back(ray_point(angle, k, half_angle, ctx));
  return pts;
}

inline FitResult fit_remainder_order(const ExpansionSeries& series, const FunctionModel& f, const mpq_class& a,
                                     double ray_angle, const PrecisionContext& ctx, const FitConfig& cfg = {}) {
  const auto pts = ray_points(ray_angle, f.sector_half_angle, cfg, ctx);
  return fit_from_samples(series, pts, direct_samples(series.kind, f, a, pts, ctx), ctx);
}

inline FitResult fit_remainder_order_2d(const ExpansionSeries& series, const FunctionModel2D& f,
                                        const std::pair<mpq_class, mpq_class>& a, double ray_angle,
                                        const PrecisionContext& ctx, const FitConfig& cfg = {}) {
  const double half = std::min(f.sector_half_angle[0], f.sector_half_angle[1]);
  const auto pts = ray_points(ray_angle, half, cfg, ctx);
  std::vector<Complex> direct;
  for (const auto& w : pts) direct.push_back(shifted_sum_2d(f, w, a, ctx).value);
  return fit_from_samples(series, pts, direct, ctx);
}

}  // namespace emlab
