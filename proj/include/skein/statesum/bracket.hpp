#pragma once

#include <map>
#include <utility>
#include <vector>

#include "skein/diagram/diagram.hpp"
#include "skein/surface/skein_vector.hpp"

namespace skein {

/// State counts of a real diagram: class -> ((zeta - iota, mu) -> number of states).
using StateCensus = std::map<CurveClass, std::map<std::pair<int, int>, std::int64_t>>;

/// Enumerates all 2^c Kauffman states with the compiled resolver.
StateCensus state_census(const MarkedDiagram& d);

/// <D> = sum over states of (-t)^(zeta - iota) (-t^2 - t^-2)^mu D(sigma).
LaurentVector bracket(const MarkedDiagram& d);

/// Coefficient of h^k of <D> under t = e^h.
RationalVector bracket_order(const MarkedDiagram& d, int k);

/// <D>_0 .. <D>_K from one enumeration.
std::vector<RationalVector> bracket_orders(const MarkedDiagram& d, int max_order);

/// Laurent bracket expanded to order K.
SeriesVector laurent_to_series(const LaurentVector& v, unsigned order);

/// Recursive t = 1 evaluation: D+ = -D0 - Dinf at the first crossing, each trivial
/// circle a factor -2. Independent of the state enumeration.
RationalVector t0_bracket(const MarkedDiagram& d);

/// <D>_1 = sum over crossings p of <D_{p,inf}>_0 - <D_{p,0}>_0, evaluated with t0_bracket.
RationalVector bfk_first_order(const MarkedDiagram& d);

/// The crossing p smoothed by the given marker (p must be marked).
MarkedDiagram smooth_at(const MarkedDiagram& d, int crossing, Marker m);

}  // namespace skein
