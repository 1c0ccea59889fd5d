#pragma once

#include <cstdio>
#include <string>

#include "emlab/numerics/real.hpp"

namespace emlab {

/// e^{log_value} in scientific notation with `digits` significant digits,
/// e.g. "5.880293129e-03". Works far outside any floating exponent range.
inline std::string format_log_sci(const mp::Real& log_value, int digits = 10) {
  if (log_value.is_inf() && log_value.sign() < 0) return "0";
  const mp::Prec p = std::max<mp::Prec>(log_value.prec(), 128) + 64;
  const mp::Real t = mp::Real(log_value, p) / mp::log(mp::Real(10L, p));
  mp::Real e = mp::floor(t);
  mp::Real mant = mp::exp((t - e) * mp::log(mp::Real(10L, p)));
  // Round the mantissa first so that 9.9999999999 carries into the exponent.
  const mp::Real scale = mp::pow(mp::Real(10L, p), static_cast<long>(digits - 1));
  mp::Real r = mp::floor(mant * scale + mp::Real(0.5, p));
  long ex = e.to_long();
  if (r >= mp::Real(10L, p) * scale) {
    r = mp::floor(r / 10L + mp::Real(0.5, p));
    ++ex;
  }
  std::string m = r.to_string(digits + 2);
  if (auto dot = m.find('.'); dot != std::string::npos) m.erase(dot);
  std::string out = m.substr(0, 1);
  if (digits > 1) out += "." + m.substr(1);
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%c%02ld", ex < 0 ? '-' : '+', ex < 0 ? -ex : ex);
  return out + buf;
}

/// |x| as a scientific string with `digits` significant digits.
inline std::string format_sci(const mp::Real& x, int digits = 10) {
  if (x.is_zero()) return "0";
  std::string s = format_log_sci(mp::log(mp::abs(x)), digits);
  return x.sign() < 0 ? "-" + s : s;
}

}  // namespace emlab
