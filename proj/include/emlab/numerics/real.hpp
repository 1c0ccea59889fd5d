#pragma once

// Thin RAII wrapper over an MPFR value with an explicit, per-value precision.
// Binary operators produce a result at the larger of the operand precisions;
// every operation rounds to nearest.

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace emlab::mp {

using Prec = mpfr_prec_t;

class Real {
public:
  Real() : Real(Prec{53}) {}

  explicit Real(Prec prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }

  Real(double x, Prec prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }

  Real(long x, Prec prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }

  Real(int x, Prec prec) : Real(static_cast<long>(x), prec) {}

  Real(unsigned long x, Prec prec) {
    mpfr_init2(v_, prec);
    mpfr_set_ui(v_, x, MPFR_RNDN);
  }

  Real(const mpz_class& x, Prec prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }

  Real(const mpq_class& x, Prec prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }

  /// Parses a decimal literal ("1e-5", "-0.25") or an exact ratio ("1/3").
  Real(const std::string& text, Prec prec) {
    mpfr_init2(v_, prec);
    if (text.find('/') != std::string::npos) {
      mpq_class q;
      if (q.set_str(text, 10) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("not a rational literal: " + text);
      }
      q.canonicalize();
      mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
      return;
    }
    char* end = nullptr;
    mpfr_strtofr(v_, text.c_str(), &end, 10, MPFR_RNDN);
    if (text.empty() || end == text.c_str() || *end != '\0') {
      mpfr_clear(v_);
      throw std::invalid_argument("not a decimal literal: " + text);
    }
  }

  Real(const Real& other) {
    mpfr_init2(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }

  /// Copy of `other` rounded to `prec`.
  Real(const Real& other, Prec prec) {
    mpfr_init2(v_, prec);
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, other.prec());
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  [[nodiscard]] Prec prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  [[nodiscard]] mpfr_srcptr get() const { return v_; }

  /// Assigns the value of `other`, rounding to this value's own precision.
  void assign(const Real& other) { mpfr_set(v_, other.v_, MPFR_RNDN); }

  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  [[nodiscard]] bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }

  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  [[nodiscard]] long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Natural log of |x| as a double; safe for values far outside double range.
  [[nodiscard]] double log_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    if (is_inf()) return std::numeric_limits<double>::infinity();
    long exp2 = 0;
    const double mant = mpfr_get_d_2exp(&exp2, v_, MPFR_RNDN);
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
  }

  /// Binary exponent e with 2^(e-1) <= |x| < 2^e (0 is mapped to LONG_MIN).
  [[nodiscard]] long exponent2() const {
    if (!is_finite() || is_zero()) return std::numeric_limits<long>::min();
    return mpfr_get_exp(v_);
  }

  /// Scientific notation with `digits` significant digits, e.g. "5.880293129e-03".
  [[nodiscard]] std::string to_sci(int digits) const {
    if (is_nan()) return "nan";
    if (is_inf()) return sign() > 0 ? "inf" : "-inf";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  /// Shortest-looking decimal rendering with `digits` significant digits.
  [[nodiscard]] std::string to_string(int digits = 40) const {
    if (is_nan()) return "nan";
    if (is_inf()) return sign() > 0 ? "inf" : "-inf";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  Real& operator+=(const Real& o) { widen(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { widen(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { widen(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { widen(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

  Real& operator+=(double o) { mpfr_add_d(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator-=(double o) { mpfr_sub_d(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(double o) { mpfr_mul_d(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(double o) { mpfr_div_d(v_, v_, o, MPFR_RNDN); return *this; }

  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(Real a, const Real& b) { a += b; return a; }
  friend Real operator-(Real a, const Real& b) { a -= b; return a; }
  friend Real operator*(Real a, const Real& b) { a *= b; return a; }
  friend Real operator/(Real a, const Real& b) { a /= b; return a; }

  friend Real operator+(Real a, long b) { a += b; return a; }
  friend Real operator-(Real a, long b) { a -= b; return a; }
  friend Real operator*(Real a, long b) { a *= b; return a; }
  friend Real operator/(Real a, long b) { a /= b; return a; }
  friend Real operator+(long a, Real b) { b += a; return b; }
  friend Real operator*(long a, Real b) { b *= a; return b; }
  friend Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(Real a, int b) { a += static_cast<long>(b); return a; }
  friend Real operator-(Real a, int b) { a -= static_cast<long>(b); return a; }
  friend Real operator*(Real a, int b) { a *= static_cast<long>(b); return a; }
  friend Real operator/(Real a, int b) { a /= static_cast<long>(b); return a; }
  friend Real operator+(int a, Real b) { b += static_cast<long>(a); return b; }
  friend Real operator*(int a, Real b) { b *= static_cast<long>(a); return b; }
  friend Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }
  friend Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }
  Real& operator+=(int o) { return *this += static_cast<long>(o); }
  Real& operator-=(int o) { return *this -= static_cast<long>(o); }
  Real& operator*=(int o) { return *this *= static_cast<long>(o); }
  Real& operator/=(int o) { return *this /= static_cast<long>(o); }

  friend Real operator+(Real a, double b) { a += b; return a; }
  friend Real operator-(Real a, double b) { a -= b; return a; }
  friend Real operator*(Real a, double b) { a *= b; return a; }
  friend Real operator/(Real a, double b) { a /= b; return a; }
  friend Real operator*(double a, Real b) { b *= a; return b; }
  friend Real operator+(double a, Real b) { b += a; return b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b) {
    if (a.is_nan()) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  friend std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

private:
  void widen(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  }

  mpfr_t v_;
};

namespace detail {
template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
Real unary(const Real& x) {
  Real r(x.prec());
  F(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline Real exp(const Real& x) { return detail::unary<mpfr_exp>(x); }
inline Real expm1(const Real& x) { return detail::unary<mpfr_expm1>(x); }
inline Real log(const Real& x) { return detail::unary<mpfr_log>(x); }
inline Real log1p(const Real& x) { return detail::unary<mpfr_log1p>(x); }
inline Real log2(const Real& x) { return detail::unary<mpfr_log2>(x); }
inline Real sqrt(const Real& x) { return detail::unary<mpfr_sqrt>(x); }
inline Real cbrt(const Real& x) { return detail::unary<mpfr_cbrt>(x); }
inline Real sin(const Real& x) { return detail::unary<mpfr_sin>(x); }
inline Real cos(const Real& x) { return detail::unary<mpfr_cos>(x); }
inline Real atan(const Real& x) { return detail::unary<mpfr_atan>(x); }
inline Real abs(const Real& x) { return detail::unary<mpfr_abs>(x); }
inline Real digamma(const Real& x) { return detail::unary<mpfr_digamma>(x); }
inline Real gamma(const Real& x) { return detail::unary<mpfr_gamma>(x); }
inline Real lgamma_abs(const Real& x) {
  Real r(x.prec());
  int sign = 0;
  mpfr_lgamma(r.get(), &sign, x.get(), MPFR_RNDN);
  return r;
}

inline Real floor(const Real& x) {
  Real r(x.prec());
  mpfr_floor(r.get(), x.get());
  return r;
}

inline Real atan2(const Real& y, const Real& x) {
  Real r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real hypot(const Real& x, const Real& y) {
  Real r(std::max(y.prec(), x.prec()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

inline Real pow(const Real& x, const Real& y) {
  Real r(std::max(y.prec(), x.prec()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

inline Real pow(const Real& x, long n) {
  Real r(x.prec());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

/// x^(1/k) for k >= 1.
inline Real rootn(const Real& x, unsigned long k) {
  Real r(x.prec());
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

/// x^q for a rational exponent, computed as (x^(1/den))^num.
inline Real pow(const Real& x, const mpq_class& q) {
  const mpz_class& den = q.get_den();
  const mpz_class& num = q.get_num();
  if (!den.fits_ulong_p() || !num.fits_slong_p()) return pow(x, Real(q, x.prec()));
  Real root = den == 1 ? x : rootn(x, den.get_ui());
  return pow(root, num.get_si());
}

inline Real pi(Prec prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

inline Real euler_gamma(Prec prec) {
  Real r(prec);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

inline Real ln2(Prec prec) {
  Real r(prec);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

inline Real infinity(Prec prec, int sign = 1) {
  Real r(prec);
  mpfr_set_inf(r.get(), sign);
  return r;
}

inline void sin_cos(Real& s, Real& c, const Real& x) { mpfr_sin_cos(s.get(), c.get(), x.get(), MPFR_RNDN); }

/// Distance to the next representable value at the given magnitude (one ulp).
inline Real ulp(const Real& x) {
  Real r(1L, x.prec());
  if (x.is_zero() || !x.is_finite()) {
    mpfr_set_zero(r.get(), 1);
    return r;
  }
  mpfr_mul_2si(r.get(), r.get(), x.exponent2() - static_cast<long>(x.prec()), MPFR_RNDN);
  return r;
}

inline Real ldexp(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

}  // namespace emlab::mp
