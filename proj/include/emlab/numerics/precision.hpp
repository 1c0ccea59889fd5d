#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "emlab/errors.hpp"
#include "emlab/numerics/real.hpp"

namespace emlab {

/// Working precision and truncation limits shared by every numeric routine.
struct PrecisionContext {
  long bits = 256;
  /// Relative target for truncating infinite sums.
  double tail_tol = std::ldexp(1.0, -256);
  std::uint64_t max_terms = std::uint64_t{1} << 24;

  /// Context at `bits` with tail_tol = 2^-bits (clamped to the double range).
  static PrecisionContext with_bits(long bits) {
    PrecisionContext ctx;
    ctx.bits = bits;
    ctx.tail_tol = std::ldexp(1.0, -static_cast<int>(std::min<long>(bits, 1000)));
    ctx.validate();
    return ctx;
  }

  void validate() const {
    if (bits < 53) fail(ErrorKind::Domain, "precision below 53 bits");
    if (!(tail_tol > 0.0 && tail_tol < 1.0)) fail(ErrorKind::Domain, "tail_tol must lie in (0, 1)");
    if (max_terms < 1) fail(ErrorKind::Domain, "max_terms must be positive");
  }

  [[nodiscard]] mp::Prec prec() const { return static_cast<mp::Prec>(bits); }

  [[nodiscard]] PrecisionContext at_bits(long b) const {
    PrecisionContext c = *this;
    c.bits = b;
    return c;
  }

  [[nodiscard]] mp::Real real(long v) const { return mp::Real(v, prec()); }
  [[nodiscard]] mp::Real real(const std::string& s) const { return mp::Real(s, prec()); }
};

}  // namespace emlab
