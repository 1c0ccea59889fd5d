#pragma once

#include <optional>

#include "emlab/errors.hpp"
#include "emlab/numerics/complex.hpp"

namespace emlab {

using mp::Complex;
using mp::Real;

/// A nonzero point of the closed sector D_theta = { r e^{i alpha} : |alpha| <= theta }.
class SectorPoint {
public:
  SectorPoint(Complex value, Real half_angle) : value_(std::move(value)), half_angle_(std::move(half_angle)) {
    const Real lim = mp::pi(half_angle_.prec()) / 2L;
    if (half_angle_.sign() < 0 || !(half_angle_ < lim)) fail(ErrorKind::Domain, "sector half-angle must lie in [0, pi/2)");
    if (value_.is_zero()) fail(ErrorKind::Domain, "sector point must be nonzero");
    const Real a = mp::abs(mp::arg(value_));
    // Allow a few double ulps so that boundary rays such as x + ix with theta = pi/4
    // (often passed as a double) are accepted.
    Real slack = mp::ulp(Real(half_angle_, 53)) * 8L;
    if (a > half_angle_ + slack) fail(ErrorKind::Domain, "point lies outside the sector");
  }

  SectorPoint(Complex value, double half_angle)
      : SectorPoint(value, Real(half_angle, value.prec())) {}

  [[nodiscard]] const Complex& value() const { return value_; }
  [[nodiscard]] const Real& half_angle() const { return half_angle_; }

  /// tan(theta): the equivalent |Im w| <= Delta Re w form.
  [[nodiscard]] Real delta() const {
    Real s(half_angle_.prec()), c(half_angle_.prec());
    mp::sin_cos(s, c, half_angle_);
    return s / c;
  }

  /// Ray point e^{i angle} r as a sector point of the given half-angle.
  static SectorPoint on_ray(const Real& radius, const Real& angle, const Real& half_angle) {
    Real s(radius.prec()), c(radius.prec());
    mp::sin_cos(s, c, angle);
    return {Complex(radius * c, radius * s), half_angle};
  }

private:
  Complex value_;
  Real half_angle_;
};

/// Path z = x + i x^p with rational exponent p > 0.
struct PathSpec {
  mpq_class exponent;

  explicit PathSpec(mpq_class p) : exponent(std::move(p)) {
    exponent.canonicalize();
    if (sgn(exponent) <= 0) fail(ErrorKind::Domain, "path exponent must be positive");
  }
  explicit PathSpec(const std::string& p) : PathSpec(mpq_class(p)) {}

  [[nodiscard]] bool tangential() const { return exponent < 1; }
};

struct PathPoint {
  Complex value;
  bool tangential = false;
  /// Present when the point lies in D_{pi/4} (always the case for p >= 1, 0 < x <= 1).
  std::optional<SectorPoint> sector;
};

inline PathPoint path_point(const PathSpec& path, const Real& x) {
  if (x.sign() <= 0) fail(ErrorKind::Domain, "path parameter x must be positive");
  Complex z(x, mp::pow(x, path.exponent));
  PathPoint out{z, path.tangential(), std::nullopt};
  if (!out.tangential) {
    const Real quarter = mp::pi(x.prec()) / 4L;
    if (!(mp::abs(mp::arg(z)) > quarter + mp::ulp(quarter) * 8L)) out.sector.emplace(z, quarter);
  }
  return out;
}

}  // namespace emlab
