#pragma once

#include <string>

#include "emlab/numerics/real.hpp"

namespace emlab::mp {

/// Complex number over two MPFR reals. Principal branch for log/arg.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  explicit Complex(Prec prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(re.prec()) {}
  Complex(double r, double i, Prec prec) : re(r, prec), im(i, prec) {}

  [[nodiscard]] Prec prec() const { return std::max(re.prec(), im.prec()); }
  [[nodiscard]] bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real den = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
  Complex& operator/=(const Real& s) { re /= s; im /= s; return *this; }
  Complex& operator*=(long s) { re *= s; im *= s; return *this; }
  Complex& operator/=(long s) { re /= s; im /= s; return *this; }

  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(Complex a, const Complex& b) { a += b; return a; }
  friend Complex operator-(Complex a, const Complex& b) { a -= b; return a; }
  friend Complex operator*(Complex a, const Complex& b) { a *= b; return a; }
  friend Complex operator/(Complex a, const Complex& b) { a /= b; return a; }
  friend Complex operator*(Complex a, const Real& s) { a *= s; return a; }
  friend Complex operator*(const Real& s, Complex a) { a *= s; return a; }
  friend Complex operator/(Complex a, const Real& s) { a /= s; return a; }
  friend Complex operator*(Complex a, long s) { a *= s; return a; }
  friend Complex operator/(Complex a, long s) { a /= s; return a; }
  friend Complex operator+(Complex a, const Real& s) { a.re += s; return a; }
  friend Complex operator-(Complex a, const Real& s) { a.re -= s; return a; }
  friend Complex operator+(Complex a, long s) { a.re += s; return a; }
  friend Complex operator-(Complex a, long s) { a.re -= s; return a; }
  friend Complex operator-(long s, const Complex& a) { return {s - a.re, -a.im}; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  [[nodiscard]] std::string to_string(int digits = 30) const {
    std::string s = re.to_string(digits);
    const std::string i = im.to_string(digits);
    if (!i.empty() && i[0] == '-') return s + i + "i";
    return s + "+" + i + "i";
  }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
/// Principal argument in (-pi, pi].
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

/// log|z| as a double, safe far outside the double range.
inline double log_abs(const Complex& z) {
  if (z.is_zero()) return -std::numeric_limits<double>::infinity();
  const double lr = z.re.log_abs();
  const double li = z.im.log_abs();
  const double hi = std::max(lr, li);
  const double lo = std::min(lr, li);
  return hi + 0.5 * std::log1p(std::exp(2.0 * (lo - hi)));
}

inline Complex exp(const Complex& z) {
  const Prec p = z.prec();
  Real s(p), c(p);
  sin_cos(s, c, z.im);
  Real m = exp(z.re);
  return {m * c, m * s};
}

/// Principal logarithm.
inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

inline Complex sqrt(const Complex& z) {
  // Principal root: sqrt(|z|) * e^{i arg(z)/2}.
  Real r = sqrt(abs(z));
  Real half = arg(z) / 2L;
  Real s(z.prec()), c(z.prec());
  sin_cos(s, c, half);
  return {r * c, r * s};
}

inline Complex pow(const Complex& z, long n) {
  Complex result(Real(1L, z.prec()), Real(z.prec()));
  Complex base = z;
  const bool invert = n < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  if (invert) {
    Complex one(Real(1L, z.prec()), Real(z.prec()));
    return one / result;
  }
  return result;
}

/// e^z - 1 without cancellation for small |z|.
inline Complex expm1(const Complex& z) {
  const Prec p = z.prec();
  Real s(p), c(p);
  sin_cos(s, c, z.im);
  Real half_s(p), half_c(p);
  sin_cos(half_s, half_c, z.im / 2L);
  // Re: e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
  Real em1 = expm1(z.re);
  Real re = em1 * c - 2L * half_s * half_s;
  Real im = exp(z.re) * s;
  return {std::move(re), std::move(im)};
}

/// Principal Log(1 - u), accurate for small |u|.
inline Complex log1m(const Complex& u) {
  // |1-u|^2 - 1 = |u|^2 - 2 Re u
  Real t = norm(u) - 2L * u.re;
  Real re = log1p(t) / 2L;
  Real im = atan2(-u.im, 1L - u.re);
  return {std::move(re), std::move(im)};
}

// In-place kernels for hot loops: no temporaries beyond the caller-provided ones.

/// out = a * b; out must not alias a or b.
inline void mul_into(Complex& out, const Complex& a, const Complex& b, Real& tmp) {
  mpfr_mul(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(tmp.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(out.re.get(), out.re.get(), tmp.get(), MPFR_RNDN);
  mpfr_mul(out.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(tmp.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), out.im.get(), tmp.get(), MPFR_RNDN);
}

/// out = a / b; out must not alias a or b.
inline void div_into(Complex& out, const Complex& a, const Complex& b, Real& t1, Real& t2) {
  mpfr_sqr(t1.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t2.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(t1.get(), t1.get(), t2.get(), MPFR_RNDN);  // |b|^2
  mpfr_mul(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(out.re.get(), out.re.get(), t2.get(), MPFR_RNDN);
  mpfr_div(out.re.get(), out.re.get(), t1.get(), MPFR_RNDN);
  mpfr_mul(out.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(out.im.get(), out.im.get(), t2.get(), MPFR_RNDN);
  mpfr_div(out.im.get(), out.im.get(), t1.get(), MPFR_RNDN);
}

}  // namespace emlab::mp
