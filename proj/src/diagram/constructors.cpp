#include <algorithm>
#include <cstdlib>

#include "skein/diagram/diagram.hpp"
#include "skein/diagram/geodesic.hpp"
#include "skein/error.hpp"

namespace skein {

namespace {

// Port of a braid crossing met by position i (left) or i+1 (right), entering from
// above or leaving below. Positive generators put the left strand over.
struct BraidPorts {
  int in_left, in_right, out_left, out_right;
};
constexpr BraidPorts kPositive{2, 1, 3, 0};
constexpr BraidPorts kNegative{3, 2, 0, 1};

MarkedDiagram disjoint_union(const MarkedDiagram& over, const MarkedDiagram& under, ProductMode mode) {
  MarkedDiagram out = over;
  out.geodesic.reset();
  const int cshift = over.crossings.empty() ? 0 : over.crossings.back() + 1;
  int eshift = 0;
  for (const auto& e : over.edges) eshift = std::max(eshift, e.id + 1);
  auto move = [&](Endpoint p) {
    if (!p.is_boundary()) p.crossing += cshift;
    return p;
  };
  for (int c : under.crossings) out.crossings.push_back(c + cshift);
  for (int c : under.marked) out.marked.push_back(c + cshift);
  for (const auto& e : under.edges) out.edges.push_back({e.id + eshift, move(e.tail), move(e.head), e.label});
  out.free_loops.insert(out.free_loops.end(), under.free_loops.begin(), under.free_loops.end());
  // No new crossings arise, so the two modes agree.
  (void)mode;
  out.normalize();
  return out;
}

}  // namespace

MarkedDiagram from_braid(int strands, const std::vector<int>& word) {
  if (strands < 1) throw Error(ErrorCode::BadGenerator, "a braid needs at least one strand");
  for (int g : word) {
    if (g == 0 || std::abs(g) >= strands) {
      throw Error(ErrorCode::BadGenerator,
                  "generator " + std::to_string(g) + " outside 1.." + std::to_string(strands - 1));
    }
  }
  MarkedDiagram d;
  d.surface = SurfaceSpec::annulus();
  // Edges leaving the top of each position are completed once the bottom is known.
  std::vector<Endpoint> tail(strands + 1);
  std::vector<int> top_edge(strands + 1, -1);
  int next_edge = 0;
  auto attach = [&](int pos, Endpoint head) {
    if (top_edge[pos] < 0 && tail[pos].crossing < 0) {
      top_edge[pos] = next_edge;
      d.edges.push_back({next_edge++, {}, head, {}});
    } else {
      d.edges.push_back({next_edge++, tail[pos], head, {}});
    }
  };
  for (int k = 1; k <= strands; ++k) tail[k] = Endpoint::boundary(0);  // marker: still at the top
  for (std::size_t c = 0; c < word.size(); ++c) {
    const int i = std::abs(word[c]);
    const BraidPorts& bp = word[c] > 0 ? kPositive : kNegative;
    const int id = static_cast<int>(c);
    d.crossings.push_back(id);
    attach(i, Endpoint::at(id, bp.in_left));
    attach(i + 1, Endpoint::at(id, bp.in_right));
    tail[i] = Endpoint::at(id, bp.out_left);
    tail[i + 1] = Endpoint::at(id, bp.out_right);
  }
  for (int k = 1; k <= strands; ++k) {
    if (top_edge[k] < 0) {
      d.free_loops.push_back({1, 0});
      continue;
    }
    // Closure arc: bottom of position k back to its top, once around the core.
    Edge& e = d.edges[top_edge[k]];
    e.tail = tail[k];
    e.label = {1, 0};
  }
  d.marked = d.crossings;
  d.normalize();
  return canonical_ports(std::move(d));
}

MarkedDiagram torus_multicurve(int n, std::int64_t p, std::int64_t q) {
  return torus_multicurve(n, p, q, make_rational(1, 5));
}

MarkedDiagram kink_chain(int i) {
  if (i < 0) throw Error(ErrorCode::InvalidArgument, "kink count must be >= 0");
  MarkedDiagram d;
  d.surface = SurfaceSpec::disk(0);
  if (i == 0) {
    d.free_loops.push_back({});
    return d;
  }
  for (int j = 0; j < i; ++j) {
    d.crossings.push_back(j);
    d.edges.push_back({2 * j, Endpoint::at(j, 0), Endpoint::at((j + 1) % i, 3), {}});
    d.edges.push_back({2 * j + 1, Endpoint::at(j, 1), Endpoint::at(j, 2), {}});
  }
  d.marked = d.crossings;
  d.normalize();
  return canonical_ports(std::move(d));
}

MarkedDiagram superpose(const MarkedDiagram& over, const MarkedDiagram& under, ProductMode mode) {
  if (over.surface != under.surface) {
    throw Error(ErrorCode::SurfaceMismatch,
                "cannot superpose " + over.surface.to_string() + " over " + under.surface.to_string());
  }
  switch (over.surface.kind) {
    case SurfaceKind::Torus: return superpose_torus(over, under, mode);
    case SurfaceKind::Annulus: return disjoint_union(over, under, mode);
    case SurfaceKind::Disk:
      if (over.surface.boundary_points == 0) return disjoint_union(over, under, mode);
      throw Error(ErrorCode::UnsupportedSuperposition, "superposition of disks with boundary points");
  }
  throw Error(ErrorCode::UnsupportedSuperposition, "unknown surface");
}

MarkedDiagram representative(const CurveClass& c) {
  MarkedDiagram d;
  switch (c.kind()) {
    case SurfaceKind::Torus: {
      if (c.is_empty()) {
        d.surface = SurfaceSpec::torus();
        return d;
      }
      const std::int64_t g = c.copies();
      return torus_multicurve(static_cast<int>(g), c.a() / g, c.b() / g);
    }
    case SurfaceKind::Annulus:
      d.surface = SurfaceSpec::annulus();
      d.free_loops.assign(static_cast<std::size_t>(c.a()), HomologyClass{1, 0});
      return d;
    case SurfaceKind::Disk: {
      d.surface = SurfaceSpec::disk(static_cast<int>(c.chords().size() * 2));
      int id = 0;
      for (const auto& [i, j] : c.chords()) d.edges.push_back({id++, Endpoint::boundary(i), Endpoint::boundary(j), {}});
      return d;
    }
  }
  return d;
}

}  // namespace skein
