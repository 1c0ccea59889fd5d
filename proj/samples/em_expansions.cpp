// Expansion coefficients for a few kernels and a direct check of one of them.

#include <iostream>

#include "emlab/emlab.hpp"

int main() {
  using namespace emlab;
  const auto ctx = PrecisionContext::with_bits(128);

  const auto reg = expand_regular(models::exp(), 0, 4);
  std::cout << "sum_{n>=0} e^{-nw}: 1/w";
  for (std::size_t n = 0; n < reg.poly.size(); ++n) std::cout << " + (" << reg.poly[n].to_string(20) << ") w^" << n;
  std::cout << '\n';

  const auto pole = expand_pole(models::exp_over_x(), 1, 3, ctx);
  std::cout << "sum_{n>=1} e^{-nw}/(nw): log(1/w)/w coefficient " << pole.log_over_w.to_string(20) << '\n';

  const SectorPoint w(Complex(Real(0.05, ctx.prec()), Real(0.02, ctx.prec())), 1.0);
  const Complex approx = eval_expansion(reg, w, ctx);
  const LatticeSum direct = shifted_sum(models::exp(), w, 0, ctx);
  std::cout << "w = 0.05+0.02i: direct " << direct.value.re.to_string(20) << " + " << direct.value.im.to_string(20)
            << "i, expansion " << approx.re.to_string(20) << " + " << approx.im.to_string(20) << "i\n";
}
