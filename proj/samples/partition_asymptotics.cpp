// Exact partition numbers against the Hardy-Ramanujan leading term, and the
// generating-function error |P(e^{-z}) sqrt(2pi/z) e^{-pi^2/(6z)} - 1| on a few points.

#include <iostream>

#include "emlab/emlab.hpp"

int main() {
  using namespace emlab;
  const auto ctx = PrecisionContext::with_bits(192);
  const auto p = partition_numbers(10000);
  const auto hr = InghamParams::partition(ctx.prec());
  for (unsigned long n : {10UL, 100UL, 1000UL, 10000UL}) {
    const LogReal pred = ingham_coefficient_asymptotic(hr, Real(n, ctx.prec()));
    const Real ratio = mp::exp(mp::log(Real(p[n], ctx.prec())) - pred.log);
    std::cout << "p(" << n << ") / prediction = " << ratio.to_string(12) << '\n';
  }
  for (int d = 1; d <= 3; ++d) {
    const TableRow r = table1_row(d, mpq_class(1), ctx);
    std::cout << "z = " << r.x_string() << "(1+i): error " << r.error_string() << '\n';
  }
}
