#include "skein/exactalg/phi.hpp"

#include "skein/exactalg/laurent.hpp"

namespace skein {

Rational phi_coeff(unsigned j, unsigned i) {
  BigInt sum(0);
  for (unsigned k = 0; k <= i; ++k) {
    const std::int64_t base = 2 * static_cast<std::int64_t>(k) - static_cast<std::int64_t>(i);
    sum += binomial(i, k) * int_pow(base, 2 * j);
  }
  Rational out(sum * int_pow(2, 2 * j), factorial(2 * j));
  out.canonicalize();
  if (i % 2 == 1) out = -out;
  return out;
}

TruncSeries loop_power_series(unsigned i, unsigned order) {
  return laurent_to_series(loop_value().pow(i), order);
}

Rational phi_series_oracle(unsigned j, unsigned i) { return loop_power_series(i, 2 * j).coeff(2 * j); }

LoopWeightFn phi_table(unsigned j) {
  return [j](unsigned loops) { return phi_coeff(j, loops); };
}

}  // namespace skein
