#pragma once

// Exact Bernoulli numbers and polynomials. B_n denotes B_n(0), so B_1 = -1/2;
// B_1(1) = +1/2 is only reachable through bernoulli_poly(1, 1).

#include <gmpxx.h>

#include <mutex>
#include <vector>

#include "emlab/numerics/real.hpp"

namespace emlab {

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Memoized B_0..B_n from sum_{k=0}^{n} C(n+1, k) B_k = 0.
class BernoulliCache {
public:
  BernoulliCache() { numbers_.emplace_back(1); }

  const mpq_class& number(unsigned n) {
    while (numbers_.size() <= n) {
      const unsigned m = static_cast<unsigned>(numbers_.size());
      mpq_class acc = 0;
      for (unsigned k = 0; k < m; ++k) acc += mpq_class(binomial(m + 1, k)) * numbers_[k];
      acc /= -static_cast<long>(m + 1);
      acc.canonicalize();
      numbers_.push_back(acc);
    }
    return numbers_[n];
  }

  /// Coefficients c_j of x^j in B_n(x) = sum_k C(n,k) B_k x^{n-k}.
  std::vector<mpq_class> poly_coeffs(unsigned n) {
    std::vector<mpq_class> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) c[n - k] = mpq_class(binomial(n, k)) * number(k);
    return c;
  }

private:
  std::vector<mpq_class> numbers_;
};

namespace detail {
struct SharedBernoulli {
  std::mutex mutex;
  BernoulliCache cache;
};
inline SharedBernoulli& shared_bernoulli() {
  static SharedBernoulli s;
  return s;
}
}  // namespace detail

inline mpq_class bernoulli_number(unsigned n) {
  auto& s = detail::shared_bernoulli();
  std::lock_guard lock(s.mutex);
  return s.cache.number(n);
}

inline std::vector<mpq_class> bernoulli_poly_coeffs(unsigned n) {
  auto& s = detail::shared_bernoulli();
  std::lock_guard lock(s.mutex);
  return s.cache.poly_coeffs(n);
}

inline mpq_class frac_part(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - mpq_class(fl);
}

/// Horner evaluation of sum c_j x^j.
template <typename T>
T horner(const std::vector<mpq_class>& c, const T& x);

template <>
inline mpq_class horner(const std::vector<mpq_class>& c, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

template <>
inline mp::Real horner(const std::vector<mpq_class>& c, const mp::Real& x) {
  mp::Real acc(x.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += mp::Real(*it, x.prec());
  }
  return acc;
}

/// B_n(x), or the periodic B~_n(x) = B_n(x - floor x).
inline mpq_class bernoulli_poly(unsigned n, const mpq_class& x, bool periodic = false) {
  return horner(bernoulli_poly_coeffs(n), periodic ? frac_part(x) : x);
}

inline mp::Real bernoulli_poly(unsigned n, const mp::Real& x, bool periodic = false) {
  const mp::Real t = periodic ? x - mp::floor(x) : x;
  return horner(bernoulli_poly_coeffs(n), t);
}

}  // namespace emlab
