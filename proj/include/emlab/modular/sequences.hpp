#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "emlab/errors.hpp"

namespace emlab {

struct SequenceTable {
  enum class Kind { Partition, Sigma3 };
  Kind kind;
  std::vector<mpz_class> values;  // values[n]; index 0 unused for sigma3

  [[nodiscard]] const mpz_class& operator[](std::size_t n) const { return values.at(n); }
};

/// p(0..n_max) from Euler's pentagonal recurrence
/// p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline SequenceTable partition_numbers(std::size_t n_max) {
  SequenceTable t{SequenceTable::Kind::Partition, {}};
  t.values.resize(n_max + 1);
  auto& p = t.values;
  p[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    mpz_class acc = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        acc += p[n - g1];
        if (g2 <= n) acc += p[n - g2];
      } else {
        acc -= p[n - g1];
        if (g2 <= n) acc -= p[n - g2];
      }
    }
    p[n] = std::move(acc);
  }
  return t;
}

/// sigma_3(n) = sum_{d | n} d^3 by trial division.
inline mpz_class sigma3(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::Domain, "sigma3 is defined for n >= 1");
  mpz_class s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class c = d;
    s += c * c * c;
    const std::uint64_t e = n / d;
    if (e != d) {
      mpz_class f = e;
      s += f * f * f;
    }
  }
  return s;
}

inline SequenceTable sigma3_table(std::size_t n_max) {
  SequenceTable t{SequenceTable::Kind::Sigma3, {}};
  t.values.resize(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) t.values[n] = sigma3(n);
  return t;
}

}  // namespace emlab
