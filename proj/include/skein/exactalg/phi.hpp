#pragma once

#include <functional>
#include <vector>

#include "skein/exactalg/rational.hpp"
#include "skein/exactalg/series.hpp"

namespace skein {

/// Loop-weight function N -> Q used by the loop projections.
using LoopWeightFn = std::function<Rational(unsigned loops)>;

/// phi_j(i): the coefficient of h^{2j} in (-t^2 - t^{-2})^i at t = e^h, via the
/// closed binomial sum  (-1)^i 4^j / (2j)! * sum_k C(i,k) (2k - i)^{2j}.
Rational phi_coeff(unsigned j, unsigned i);

/// Same number read off the expanded series of (-t^2 - t^{-2})^i.
Rational phi_series_oracle(unsigned j, unsigned i);

/// (-t^2 - t^{-2})^i expanded to h^order.
TruncSeries loop_power_series(unsigned i, unsigned order);

/// phi_j as a loop-weight function (closed form).
LoopWeightFn phi_table(unsigned j);

}  // namespace skein
