#include "skein/diagram/diagram.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "skein/error.hpp"

namespace skein {

namespace {

auto identity_key(const MarkedDiagram& d) {
  return std::tie(d.surface, d.crossings, d.edges, d.free_loops, d.marked);
}

std::string describe(const Endpoint& e) {
  if (e.is_boundary()) return "boundary point " + std::to_string(e.port);
  return "crossing " + std::to_string(e.crossing) + " port " + std::to_string(e.port);
}

}  // namespace

bool operator==(const MarkedDiagram& x, const MarkedDiagram& y) { return identity_key(x) == identity_key(y); }

std::strong_ordering operator<=>(const MarkedDiagram& x, const MarkedDiagram& y) {
  return identity_key(x) <=> identity_key(y);
}

bool MarkedDiagram::is_marked(int crossing_id) const {
  return std::binary_search(marked.begin(), marked.end(), crossing_id);
}

const Edge* MarkedDiagram::find_edge(int id) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), id, [](const Edge& e, int v) { return e.id < v; });
  return (it != edges.end() && it->id == id) ? &*it : nullptr;
}

void MarkedDiagram::normalize() {
  std::sort(crossings.begin(), crossings.end());
  std::sort(marked.begin(), marked.end());
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (auto& h : free_loops) h = canonical_loop_class(surface.kind, h);
  std::sort(free_loops.begin(), free_loops.end());
  if (surface.kind == SurfaceKind::Disk) {
    for (auto& e : edges) e.label = {};
  } else if (surface.kind == SurfaceKind::Annulus) {
    for (auto& e : edges) e.label.b = 0;
  }
}

MarkedDiagram MarkedDiagram::promoted() const {
  MarkedDiagram d = *this;
  d.marked = d.crossings;
  return d;
}

MarkedDiagram MarkedDiagram::with_marked(std::vector<int> marked_ids) const {
  std::sort(marked_ids.begin(), marked_ids.end());
  for (int c : marked_ids) {
    if (!std::binary_search(crossings.begin(), crossings.end(), c)) {
      throw Error(ErrorCode::InvalidArgument, "marked crossing " + std::to_string(c) + " does not exist");
    }
  }
  MarkedDiagram d = *this;
  d.marked = std::move(marked_ids);
  return d;
}

void validate(const MarkedDiagram& d) {
  try {
    d.surface.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedDiagram, e.what());
  }
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::MalformedDiagram, msg); };

  if (!std::is_sorted(d.crossings.begin(), d.crossings.end()) ||
      std::adjacent_find(d.crossings.begin(), d.crossings.end()) != d.crossings.end()) {
    fail("crossing ids must be sorted and unique");
  }
  if (!std::is_sorted(d.marked.begin(), d.marked.end()) ||
      std::adjacent_find(d.marked.begin(), d.marked.end()) != d.marked.end()) {
    fail("marked ids must be sorted and unique");
  }
  for (int c : d.marked) {
    if (!std::binary_search(d.crossings.begin(), d.crossings.end(), c)) {
      fail("marked crossing " + std::to_string(c) + " is not a crossing");
    }
  }
  for (std::size_t k = 1; k < d.edges.size(); ++k) {
    if (d.edges[k - 1].id >= d.edges[k].id) fail("edge ids must be sorted and unique");
  }
  if (!std::is_sorted(d.free_loops.begin(), d.free_loops.end())) fail("free loops must be sorted");
  for (const auto& h : d.free_loops) {
    if (canonical_loop_class(d.surface.kind, h) != h) fail("free loop class is not canonical");
  }

  std::set<Endpoint> used;
  const bool disk = d.surface.kind == SurfaceKind::Disk;
  for (const auto& e : d.edges) {
    for (const Endpoint& p : {e.tail, e.head}) {
      if (p.is_boundary()) {
        if (!disk) fail("boundary endpoint on a closed surface (edge " + std::to_string(e.id) + ")");
        if (p.port < 1 || p.port > d.surface.boundary_points) fail("no such " + describe(p));
      } else {
        if (!std::binary_search(d.crossings.begin(), d.crossings.end(), p.crossing)) {
          fail("edge " + std::to_string(e.id) + " ends at unknown crossing " + std::to_string(p.crossing));
        }
        if (p.port < 0 || p.port > 3) fail("bad port at " + describe(p));
      }
      if (!used.insert(p).second) fail(describe(p) + " is used twice");
    }
    if (disk && !e.label.is_zero()) fail("disk edges carry no homology");
    if (d.surface.kind == SurfaceKind::Annulus && e.label.b != 0) fail("annulus labels are single integers");
  }
  for (int c : d.crossings) {
    for (int p = 0; p < 4; ++p) {
      if (!used.count(Endpoint::at(c, p))) fail("dangling " + describe(Endpoint::at(c, p)));
    }
  }
  if (disk) {
    for (int b = 1; b <= d.surface.boundary_points; ++b) {
      if (!used.count(Endpoint::boundary(b))) fail("unused " + describe(Endpoint::boundary(b)));
    }
  }
}

MarkedDiagram canonical_ports(MarkedDiagram d) {
  if (d.crossings.empty()) return d;
  // (edge id, end) attached at ports 0 and 2 of each crossing
  std::map<int, std::array<std::pair<int, int>, 4>> ends;
  for (const auto& e : d.edges) {
    if (!e.tail.is_boundary()) ends[e.tail.crossing][e.tail.port] = {e.id, 0};
    if (!e.head.is_boundary()) ends[e.head.crossing][e.head.port] = {e.id, 1};
  }
  std::set<int> rotate;
  for (const auto& [c, a] : ends) {
    if (a[2] < a[0]) rotate.insert(c);
  }
  if (rotate.empty()) return d;
  auto fix = [&](Endpoint& p) {
    if (!p.is_boundary() && rotate.count(p.crossing)) p.port = (p.port + 2) % 4;
  };
  for (auto& e : d.edges) {
    fix(e.tail);
    fix(e.head);
  }
  return d;
}

MarkedDiagram tau(const MarkedDiagram& d) {
  if (d.marked.empty()) return d;
  MarkedDiagram out = d;
  out.geodesic.reset();
  auto turn = [&](Endpoint& p) {
    if (!p.is_boundary() && out.is_marked(p.crossing)) p.port = (p.port + 1) % 4;
  };
  for (auto& e : out.edges) {
    turn(e.tail);
    turn(e.head);
  }
  // Canonicalize only the changed crossings; unmarked ones keep their labels.
  MarkedDiagram canon = canonical_ports(out);
  for (std::size_t k = 0; k < out.edges.size(); ++k) {
    for (auto [p, q] : {std::pair{&out.edges[k].tail, &canon.edges[k].tail},
                        std::pair{&out.edges[k].head, &canon.edges[k].head}}) {
      if (!p->is_boundary() && out.is_marked(p->crossing)) *p = *q;
    }
  }
  return out;
}

namespace {

HomologyClass act(const IntMatrix2& m, const HomologyClass& h) {
  return {m[0][0] * h.a + m[0][1] * h.b, m[1][0] * h.a + m[1][1] * h.b};
}

void check_unimodular(const IntMatrix2& m) {
  if (m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1) {
    throw Error(ErrorCode::NotUnimodular, "matrix determinant must be 1");
  }
}

}  // namespace

MarkedDiagram sl2z_act(const IntMatrix2& m, const MarkedDiagram& d) {
  check_unimodular(m);
  if (d.surface.kind != SurfaceKind::Torus) throw Error(ErrorCode::SurfaceMismatch, "SL(2,Z) acts on torus diagrams");
  MarkedDiagram out = d;
  out.geodesic.reset();
  for (auto& e : out.edges) e.label = act(m, e.label);
  for (auto& h : out.free_loops) h = act(m, h);
  out.normalize();
  return out;
}

CurveClass sl2z_act(const IntMatrix2& m, const CurveClass& c) {
  check_unimodular(m);
  if (c.kind() != SurfaceKind::Torus) throw Error(ErrorCode::SurfaceMismatch, "SL(2,Z) acts on torus classes");
  const HomologyClass h = act(m, {c.a(), c.b()});
  return CurveClass::torus(h.a, h.b);
}

Resolution classify_crossingless(const MarkedDiagram& d) {
  if (!d.crossings.empty()) throw Error(ErrorCode::InvalidArgument, "diagram still has crossings");
  const ComponentSummary s = classify_components(d.surface, d.free_loops);
  Resolution r;
  r.trivial = s.trivial;
  r.essential = s.essential;
  if (d.surface.kind == SurfaceKind::Disk) {
    std::vector<CurveClass::Chord> chords;
    for (const auto& e : d.edges) {
      if (!e.tail.is_boundary() || !e.head.is_boundary()) {
        throw Error(ErrorCode::MalformedDiagram, "crossingless disk edge must join boundary points");
      }
      chords.emplace_back(e.tail.port, e.head.port);
    }
    r.essential = chords.empty() ? CurveClass::empty(SurfaceKind::Disk) : CurveClass::disk(std::move(chords));
  } else if (!d.edges.empty()) {
    throw Error(ErrorCode::MalformedDiagram, "crossingless closed-surface diagram must consist of free loops");
  }
  return r;
}

Resolution resolve(const MarkedDiagram& d, const KState& full_state) {
  if (!d.is_real()) throw Error(ErrorCode::NotRealDiagram, "resolve needs C = all crossings");
  if (full_state.size() != d.crossings.size()) {
    throw Error(ErrorCode::InvalidArgument, "resolve needs a marker at every crossing");
  }
  Resolution r = classify_crossingless(smooth(d, full_state));
  for (const auto& [c, m] : full_state) {
    (m == Marker::Zero ? r.zeros : r.infinities) += 1;
  }
  return r;
}

}  // namespace skein
