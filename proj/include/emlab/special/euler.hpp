#pragma once

// Euler polynomials from their own generating function 2e^{tx}/(e^t + 1):
// E_n(x) = sum_k C(n,k) e_k x^{n-k} with e_k = E_k(0) and
// e_n = -(1/2) sum_{k<n} C(n,k) e_k  (n >= 1).

#include <mutex>
#include <vector>

#include "emlab/special/bernoulli.hpp"

namespace emlab {

class EulerCache {
public:
  EulerCache() { at_zero_.emplace_back(1); }

  const mpq_class& value_at_zero(unsigned n) {
    while (at_zero_.size() <= n) {
      const unsigned m = static_cast<unsigned>(at_zero_.size());
      mpq_class acc = 0;
      for (unsigned k = 0; k < m; ++k) acc += mpq_class(binomial(m, k)) * at_zero_[k];
      acc /= -2;
      acc.canonicalize();
      at_zero_.push_back(acc);
    }
    return at_zero_[n];
  }

  std::vector<mpq_class> poly_coeffs(unsigned n) {
    std::vector<mpq_class> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) c[n - k] = mpq_class(binomial(n, k)) * value_at_zero(k);
    return c;
  }

private:
  std::vector<mpq_class> at_zero_;
};

inline std::vector<mpq_class> euler_poly_coeffs(unsigned n) {
  static std::mutex mutex;
  static EulerCache cache;
  std::lock_guard lock(mutex);
  return cache.poly_coeffs(n);
}

inline mpq_class euler_poly(unsigned n, const mpq_class& x) { return horner(euler_poly_coeffs(n), x); }

inline mp::Real euler_poly(unsigned n, const mp::Real& x) { return horner(euler_poly_coeffs(n), x); }

}  // namespace emlab
