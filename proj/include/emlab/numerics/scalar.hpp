#pragma once

// A coefficient that stays an exact rational for as long as its inputs are
// exact, and degrades to an MPFR real otherwise.

#include <string>
#include <variant>

#include "emlab/numerics/real.hpp"

namespace emlab {

class Scalar {
public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(long v) : v_(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : v_(mpq_class(v)) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class q) : v_(canon(std::move(q))) {}  // NOLINT(google-explicit-constructor)
  Scalar(mp::Real r) : v_(std::move(r)) {}          // NOLINT(google-explicit-constructor)

  [[nodiscard]] bool exact() const { return std::holds_alternative<mpq_class>(v_); }
  [[nodiscard]] const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  [[nodiscard]] mp::Real to_real(mp::Prec prec) const {
    if (exact()) return mp::Real(rational(), prec);
    return mp::Real(std::get<mp::Real>(v_), prec);
  }

  [[nodiscard]] bool is_zero() const {
    return exact() ? sgn(rational()) == 0 : std::get<mp::Real>(v_).is_zero();
  }

  /// "p/q" (or "p") for exact values, otherwise a decimal with `digits` significant digits.
  [[nodiscard]] std::string to_string(int digits = 40) const {
    if (exact()) return rational().get_str();
    return std::get<mp::Real>(v_).to_string(digits);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact() && b.exact()) return Scalar(mpq_class(a.rational() + b.rational()));
    const mp::Prec p = common_prec(a, b);
    return Scalar(a.to_real(p) + b.to_real(p));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact() && b.exact()) return Scalar(mpq_class(a.rational() - b.rational()));
    const mp::Prec p = common_prec(a, b);
    return Scalar(a.to_real(p) - b.to_real(p));
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact() && b.exact()) return Scalar(mpq_class(a.rational() * b.rational()));
    // Exact zero annihilates.
    if ((a.exact() && a.is_zero()) || (b.exact() && b.is_zero())) return Scalar(0);
    const mp::Prec p = common_prec(a, b);
    return Scalar(a.to_real(p) * b.to_real(p));
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.exact() && b.exact()) return Scalar(mpq_class(a.rational() / b.rational()));
    const mp::Prec p = common_prec(a, b);
    return Scalar(a.to_real(p) / b.to_real(p));
  }
  Scalar operator-() const {
    if (exact()) return Scalar(mpq_class(-rational()));
    return Scalar(-std::get<mp::Real>(v_));
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Exact equality for rationals; value equality otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact() && b.exact()) return a.rational() == b.rational();
    const mp::Prec p = common_prec(a, b);
    return a.to_real(p) == b.to_real(p);
  }

private:
  static mpq_class canon(mpq_class q) {
    q.canonicalize();
    return q;
  }
  static mp::Prec common_prec(const Scalar& a, const Scalar& b) {
    mp::Prec p = 53;
    if (!a.exact()) p = std::max(p, std::get<mp::Real>(a.v_).prec());
    if (!b.exact()) p = std::max(p, std::get<mp::Real>(b.v_).prec());
    return p;
  }

  std::variant<mpq_class, mp::Real> v_;
};

/// Exact rational from "p/q", an integer, or a decimal literal such as "-1.25e-3".
inline mpq_class parse_rational(const std::string& text) {
  auto bad = [&] { throw std::invalid_argument("not a rational or decimal literal: " + text); };
  if (text.empty()) bad();
  if (text.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) bad();
    q.canonicalize();
    return q;
  }
  std::string mant = text;
  long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mant = text.substr(0, e);
    try {
      std::size_t used = 0;
      exp10 = std::stol(text.substr(e + 1), &used);
      if (used != text.size() - e - 1) bad();
    } catch (const std::logic_error&) {
      bad();
    }
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant.erase(0, 1);
  }
  std::string digits;
  bool seen_point = false;
  for (char c : mant) {
    if (c == '.') {
      if (seen_point) bad();
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) --exp10;
    } else {
      bad();
    }
  }
  if (digits.empty()) bad();
  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  mpq_class q = exp10 < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

}  // namespace emlab
