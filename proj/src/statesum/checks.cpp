#include "skein/statesum/checks.hpp"

#include <algorithm>

#include "skein/diagram/geodesic.hpp"
#include "skein/error.hpp"
#include "skein/statesum/bracket.hpp"

namespace skein {

namespace {

PolyZW drop_and_divide(const PolyZW& p, bool by_w) {
  PolyZW out;
  for (const auto& [e, c] : p.terms()) {
    if (by_w && e.second > 0) out.add_term(e.first, e.second - 1, c);
    if (!by_w && e.first > 0) out.add_term(e.first - 1, e.second, c);
  }
  return out;
}

FormalDiagramSum reduce_at(const FormalDiagramSum& s, int crossing) {
  FormalDiagramSum out;
  for (const auto& [d, c] : s.terms()) {
    if (!std::binary_search(d.crossings.begin(), d.crossings.end(), crossing)) {
      out.add(c, d);
      continue;
    }
    std::vector<int> marked = d.marked;
    if (!d.is_marked(crossing)) marked.push_back(crossing);
    const MarkedDiagram m = d.with_marked(marked);
    // smoothing drops `crossing` from the marked set, leaving the rest as it was
    for (Marker mk : {Marker::Zero, Marker::Infinity}) out.add(c, smooth(m, KState{{crossing, mk}}));
  }
  return out;
}

// Renumbers crossings and edges by rank. Superposition shifts ids by the lower
// diagram's maxima, so terms are compared up to this order-preserving relabeling.
MarkedDiagram compacted(const MarkedDiagram& d) {
  auto rank = [](const std::vector<int>& ids, int id) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<int> edge_ids;
  for (const auto& e : d.edges) edge_ids.push_back(e.id);
  std::sort(edge_ids.begin(), edge_ids.end());
  MarkedDiagram out = d;
  auto move = [&](Endpoint p) {
    if (!p.is_boundary()) p.crossing = rank(d.crossings, p.crossing);
    return p;
  };
  for (auto& c : out.crossings) c = rank(d.crossings, c);
  for (auto& c : out.marked) c = rank(d.crossings, c);
  for (auto& e : out.edges) {
    e.id = rank(edge_ids, e.id);
    e.tail = move(e.tail);
    e.head = move(e.head);
  }
  out.normalize();
  return out;
}

FormalDiagramSum compacted(const FormalDiagramSum& s) {
  FormalDiagramSum out;
  for (const auto& [d, c] : s.terms()) out.add(c, compacted(d));
  return out;
}

std::string cls_list(const RationalVector& v) { return v.to_string(); }

LaurentVector promoted_bracket(const FormalDiagramSum& s) {
  LaurentVector out;
  for (const auto& [d, c] : s.terms()) out += bracket(d.promoted()) * c;
  return out;
}

}  // namespace

FormalDiagramSum skein_relation_residual(const PolyZW& p, const MarkedDiagram& d_plus, int crossing,
                                         ResidualMode mode) {
  if (!p.is_homogeneous() || p.total_degree() < 1) {
    throw Error(ErrorCode::InvalidArgument, "skein relation needs homogeneous P of degree >= 1");
  }
  if (!d_plus.is_marked(crossing)) throw Error(ErrorCode::StateOutsideMarkedSet, "crossing must be marked");
  const int k = p.total_degree();
  const MarkedDiagram d0 = smooth(d_plus, KState{{crossing, Marker::Zero}});
  const MarkedDiagram dinf = smooth(d_plus, KState{{crossing, Marker::Infinity}});
  FormalDiagramSum out = chi_apply(p, d_plus);
  out -= chi_apply(p, d0);
  out -= chi_apply(p, dinf);
  PolyZW no_top = p;
  no_top.add_term(k, 0, -p.coeff(k, 0));
  PolyZW no_bottom = p;
  no_bottom.add_term(0, k, -p.coeff(0, k));
  out += chi_apply(drop_and_divide(no_top, true), d0);
  out += chi_apply(drop_and_divide(no_bottom, false), dinf);
  if (mode == ResidualMode::ReduceUnmarked) out = reduce_at(out, crossing);
  return out;
}

CheckReport divergence_check(const PolyZW& homogeneous, const MarkedDiagram& d) {
  CheckReport r{"divergence"};
  const int k = homogeneous.total_degree();
  const FormalDiagramSum direct = chi_apply(homogeneous, d);
  FormalDiagramSum grouped;
  std::size_t subsets = 0;
  const int n = static_cast<int>(d.marked.size());
  for_each_k_state(n, k, [&](std::uint64_t t, std::uint64_t s) {
    if (s != 0) return;  // once per subset
    ++subsets;
    std::vector<int> subset, rest;
    for (int i = 0; i < n; ++i) (((t >> i) & 1) ? subset : rest).push_back(d.marked[i]);
    const MarkedDiagram on_t = d.with_marked(subset);
    const FormalDiagramSum part = chi_on_subset(homogeneous, on_t, subset);
    for (const auto& [x, c] : part.terms()) {
      grouped.add(c, x.with_marked(rest));
    }
  });
  r.expect(direct == grouped, "chi_P[D,C] differs from its subset decomposition");
  r.note(std::to_string(subsets) + " subsets of size " + std::to_string(k));
  return r;
}

CheckReport weak_product_check(const PolyZW& p, const MarkedDiagram& other, const MarkedDiagram& d) {
  CheckReport r{"weak product"};
  const MarkedDiagram fixed = other.with_marked({});
  const FormalDiagramSum inner = chi_apply(p, d);
  for (bool other_on_top : {true, false}) {
    const std::string where = other_on_top ? "D' over D" : "D over D'";
    const MarkedDiagram stacked =
        other_on_top ? superpose(fixed, d, ProductMode::Weak) : superpose(d, fixed, ProductMode::Weak);
    const FormalDiagramSum lhs = chi_apply(p, stacked);

    if (d.surface.kind != SurfaceKind::Torus) {
      FormalDiagramSum rhs;
      for (const auto& [y, c] : inner.terms()) {
        rhs.add(c, other_on_top ? superpose(fixed, y, ProductMode::Weak) : superpose(y, fixed, ProductMode::Weak));
      }
      r.expect(compacted(lhs) == compacted(rhs), where + ": structural mismatch");
    }

    // Brackets: <D' > Y> = sum over classes b of <Y>_b <D' > rep(b)>.
    const MarkedDiagram real_other = other.promoted();
    LaurentVector rhs;
    for (const auto& [y, c] : inner.terms()) {
      for (const auto& [cls, coeff] : bracket(y.promoted())) {
        const MarkedDiagram rep = representative(cls);
        const MarkedDiagram pair = other_on_top ? superpose(real_other, rep, ProductMode::Strong)
                                                : superpose(rep, real_other, ProductMode::Strong);
        rhs += bracket(pair) * (coeff * c);
      }
    }
    r.expect(promoted_bracket(lhs) == rhs, where + ": bracket mismatch");
  }
  return r;
}

CheckReport vacuum_check(const PolyZW& p, const SurfaceSpec& surface) {
  CheckReport r{"vacuum"};
  MarkedDiagram empty;
  empty.surface = surface;
  const FormalDiagramSum got = chi_apply(p, empty);
  const FormalDiagramSum want(p.constant_term(), empty);
  r.expect(got == want, "chi_P(empty) on " + surface.to_string() + " is not the constant term");
  return r;
}

CheckReport composition_check(const PolyZW& p, const PolyZW& q, const MarkedDiagram& d) {
  CheckReport r{"composition"};
  const LoopWeightFn phi0 = phi_table(0);
  const RationalVector lhs = phi_star(phi0, chi_apply(p, chi_apply(q, d)));
  const RationalVector rhs = phi_star(phi0, chi_apply(p * q, d));
  r.expect(lhs == rhs, "P=" + p.to_string() + ", Q=" + q.to_string() + ": " + cls_list(lhs) + " vs " + cls_list(rhs));
  return r;
}

CheckReport divided_power_check(const PolyZW& p, const PolyZW& q, const MarkedDiagram& d) {
  CheckReport r{"divided-power composition"};
  r.expect(chi_apply(p, chi_apply(q, d)) == chi_apply(divided_power_product(p, q), d),
           "P=" + p.to_string() + ", Q=" + q.to_string());
  return r;
}

CheckReport grading_check(const PolyZW& homogeneous, const MarkedDiagram& d) {
  CheckReport r{"grading"};
  const std::size_t want = d.marked.size() - std::min<std::size_t>(d.marked.size(), homogeneous.total_degree());
  const FormalDiagramSum image = chi_apply(homogeneous, d);
  for (const auto& [x, c] : image.terms()) {
    r.expect(x.marked.size() == want && x.crossings.size() == d.crossings.size() - (d.marked.size() - want),
             "term with |C|=" + std::to_string(x.marked.size()) + ", expected " + std::to_string(want));
  }
  return r;
}

CheckReport injectivity_witness_check(const PolyZW& homogeneous) {
  CheckReport r{"injectivity witness"};
  const int i = homogeneous.total_degree();
  const MarkedDiagram chain = kink_chain(i);
  const FormalDiagramSum got = chi_apply(homogeneous, chain);
  FormalDiagramSum want;
  Rational projected;
  for (int l = 0; l <= i; ++l) {
    MarkedDiagram circles;
    circles.surface = chain.surface;
    circles.free_loops.assign(static_cast<std::size_t>(l + 1), HomologyClass{});
    const Rational c = Rational(binomial(i, l)) * homogeneous.coeff(l, i - l) * sign_pow(i);
    want.add(c, circles);
    projected += c * Rational(int_pow(-2, static_cast<unsigned>(l + 1)));
  }
  r.expect(got == want, "binomial pattern on kink_chain(" + std::to_string(i) + ")");
  r.expect(!got.is_zero(), "chi_P(kink_chain(" + std::to_string(i) + ")) vanishes");
  const RationalVector proj = phi_star(phi_table(0), got);
  r.expect(proj == RationalVector(CurveClass::empty(SurfaceKind::Disk), projected), "phi_0 projection pattern");
  return r;
}

CheckReport mirror_symmetry_check(const MarkedDiagram& d, int max_order) {
  CheckReport r{"mirror symmetry"};
  const MarkedDiagram m = tau(d);
  const LaurentVector b = bracket(d);
  r.expect(bracket(m) == b.map([](const LaurentPoly& x) { return x.mirror(); }), "bracket(tau D) != bracket(D)(1/t)");
  const auto lhs = bracket_orders(m, max_order);
  const auto rhs = bracket_orders(d, max_order);
  for (int k = 0; k <= max_order; ++k) {
    r.expect(lhs[k] == rhs[k] * Rational(sign_pow(k)), "order " + std::to_string(k));
  }
  return r;
}

}  // namespace skein
