#pragma once

#include <vector>

#include "skein/diagram/diagram.hpp"
#include "skein/statesum/poly_table.hpp"
#include "skein/surface/skein_vector.hpp"

namespace skein {

/// <D>_k by the resolution formula: sum over j of (phi_j)_* chi(P_{k-2j})(D).
RationalVector expansion(const MarkedDiagram& d, int k, DeformationPolyTable& table = shared_poly_table());

/// Orders 0..K of the resolution formula. Each k-state smoothing is computed once and
/// shared by every P_{k-2j} (chi is linear in the state weights).
std::vector<RationalVector> expansion_series(const MarkedDiagram& d, int max_order,
                                             DeformationPolyTable& table = shared_poly_table());

/// Same value built literally as phi_star(phi_j, chi_apply(P, D)) per term; slower.
RationalVector expansion_literal(const MarkedDiagram& d, int k, DeformationPolyTable& table = shared_poly_table());

}  // namespace skein
