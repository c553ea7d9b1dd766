#include "skein/statesum/expansion.hpp"

#include "skein/error.hpp"
#include "skein/statesum/chi.hpp"

namespace skein {

std::vector<RationalVector> expansion_series(const MarkedDiagram& d, int max_order, DeformationPolyTable& table) {
  if (max_order < 0) throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
  if (!d.is_real()) throw Error(ErrorCode::NotRealDiagram, "expansion needs C = all crossings");
  const std::vector<PolyZW> polys = table.up_to(max_order);
  const int n = static_cast<int>(d.marked.size());
  const int top = std::min(max_order, n);

  // census[deg][ell]: loop census of sum over deg-subsets and states with ell infinities.
  std::vector<std::vector<LoopCensus>> census(top + 1);
  for (int deg = 0; deg <= top; ++deg) {
    census[deg].resize(deg + 1);
    for_each_k_state(n, deg, [&](std::uint64_t t, std::uint64_t s) {
      add_census(census[deg][__builtin_popcountll(s)], loop_census(smooth(d, k_state(d, t, s))));
    });
  }

  std::vector<RationalVector> out(max_order + 1);
  for (int k = 0; k <= max_order; ++k) {
    for (int j = 0; 2 * j <= k; ++j) {
      const PolyZW& p = polys[k - 2 * j];
      const LoopWeightFn phi = phi_table(j);
      for (int deg = 0; deg <= std::min(p.total_degree(), top); ++deg) {
        const PolyZW part = p.homogeneous_part(deg);
        if (part.is_zero()) continue;
        const std::vector<Rational> w = state_weights(part, deg);
        for (int ell = 0; ell <= deg; ++ell) {
          if (!is_zero(w[ell])) out[k] += contract_census(census[deg][ell], phi) * w[ell];
        }
      }
    }
  }
  return out;
}

RationalVector expansion(const MarkedDiagram& d, int k, DeformationPolyTable& table) {
  return expansion_series(d, k, table).at(k);
}

RationalVector expansion_literal(const MarkedDiagram& d, int k, DeformationPolyTable& table) {
  const std::vector<PolyZW> polys = table.up_to(k);
  RationalVector out;
  for (int j = 0; 2 * j <= k; ++j) out += phi_star(phi_table(j), chi_apply(polys[k - 2 * j], d));
  return out;
}

}  // namespace skein
