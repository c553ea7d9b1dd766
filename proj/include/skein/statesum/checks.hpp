#pragma once

#include "skein/diagram/diagram.hpp"
#include "skein/exactalg/poly_zw.hpp"
#include "skein/report.hpp"
#include "skein/statesum/chi.hpp"

namespace skein {

enum class ResidualMode {
  Literal,         // the three terms as written
  ReduceUnmarked,  // terms still containing the crossing are resolved by X = X_0 + X_inf
};

/// chi_P(D+ - D0 - Dinf) + chi_{(P - a_k z^k)/w}(D0) + chi_{(P - a_0 w^k)/z}(Dinf) for
/// homogeneous P of degree k >= 1 and a marked crossing p of D+. D0 and Dinf carry
/// C \ {p}. Empty when the relation holds.
FormalDiagramSum skein_relation_residual(const PolyZW& p, const MarkedDiagram& d_plus, int crossing,
                                         ResidualMode mode = ResidualMode::Literal);

/// chi_P[D,C] equals the sum over |T| = deg P of chi_P[D,T] with C \ T re-attached.
CheckReport divergence_check(const PolyZW& homogeneous, const MarkedDiagram& d);

/// chi_P([D',0] > [D,C]) = [D',0] > chi_P[D,C], both stacking orders. Compared
/// structurally where superposition is a disjoint union, and after promoting every
/// term to a real diagram and taking brackets in all cases (the right side is
/// rebuilt from the brackets of its terms by stacking onto representatives).
CheckReport weak_product_check(const PolyZW& p, const MarkedDiagram& other, const MarkedDiagram& d);

/// chi_P of the empty diagram is (constant term) times the empty diagram.
CheckReport vacuum_check(const PolyZW& p, const SurfaceSpec& surface);

/// (phi_0)_* chi_P chi_Q (D) = (phi_0)_* chi_{PQ} (D).
CheckReport composition_check(const PolyZW& p, const PolyZW& q, const MarkedDiagram& d);

/// chi_P chi_Q = chi_{P*Q} structurally, with z^a w^b * z^c w^d =
/// C(a+c,a) C(b+d,b) z^{a+c} w^{b+d}.
CheckReport divided_power_check(const PolyZW& p, const PolyZW& q, const MarkedDiagram& d);

/// Homogeneous degree-d P maps |C| = m diagrams to |C| = m - d diagrams.
CheckReport grading_check(const PolyZW& homogeneous, const MarkedDiagram& d);

/// chi_P(kink_chain(i)) has coefficient (-1)^i C(i,l) a_l on the (l+1)-circle diagram,
/// hence is nonzero for P != 0; its phi_0 projection is sum_l (-1)^i C(i,l) a_l (-2)^(l+1).
CheckReport injectivity_witness_check(const PolyZW& homogeneous);

/// bracket(tau D)(t) = bracket(D)(1/t) and <tau D>_k = (-1)^k <D>_k for k <= max_order.
CheckReport mirror_symmetry_check(const MarkedDiagram& d, int max_order);

}  // namespace skein
