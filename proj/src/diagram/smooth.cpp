#include <algorithm>

#include "skein/diagram/diagram.hpp"
#include "skein/error.hpp"

namespace skein {

namespace {

// Port pairs joined by each smoothing.
constexpr int kJoin[2][2][2] = {{{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}};

struct Slot {
  int edge = -1;
  int end = 0;  // 0 tail, 1 head
};

}  // namespace

MarkedDiagram smooth(const MarkedDiagram& d, const KState& state) {
  if (state.empty()) return d;
  for (const auto& [c, m] : state) {
    if (!d.is_marked(c)) {
      throw Error(ErrorCode::StateOutsideMarkedSet, "crossing " + std::to_string(c) + " is not in the marked set");
    }
  }

  std::vector<Edge> edges = d.edges;
  std::vector<char> alive(edges.size(), 1);
  const auto index_of = [&](int crossing) {
    return static_cast<int>(std::lower_bound(d.crossings.begin(), d.crossings.end(), crossing) - d.crossings.begin());
  };
  std::vector<Slot> slots(d.crossings.size() * 4);
  auto slot_at = [&](const Endpoint& p) -> Slot* {
    return p.is_boundary() ? nullptr : &slots[index_of(p.crossing) * 4 + p.port];
  };
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (Slot* s = slot_at(edges[k].tail)) *s = {static_cast<int>(k), 0};
    if (Slot* s = slot_at(edges[k].head)) *s = {static_cast<int>(k), 1};
  }

  MarkedDiagram out;
  out.surface = d.surface;
  out.free_loops = d.free_loops;

  for (const auto& [c, marker] : state) {
    const int base = index_of(c) * 4;
    for (const auto& pair : kJoin[static_cast<int>(marker)]) {
      const Slot sa = slots[base + pair[0]];
      const Slot sb = slots[base + pair[1]];
      if (sa.edge == sb.edge) {
        // The edge runs between the two joined ports: it closes up.
        out.free_loops.push_back(edges[sa.edge].label);
        alive[sa.edge] = 0;
        continue;
      }
      const Edge& a = edges[sa.edge];
      const Edge& b = edges[sb.edge];
      // Walk a into the crossing, then b out of it.
      const bool a_fwd = sa.end == 1;
      const bool b_fwd = sb.end == 0;
      Endpoint start = a_fwd ? a.tail : a.head;
      Endpoint finish = b_fwd ? b.head : b.tail;
      HomologyClass label = (a_fwd ? a.label : -a.label) + (b_fwd ? b.label : -b.label);
      const int id = std::min(a.id, b.id);
      const bool keep = a.id < b.id ? a_fwd : b_fwd;
      if (!keep) {
        std::swap(start, finish);
        label = -label;
      }
      alive[sb.edge] = 0;
      Edge& merged = edges[sa.edge];
      merged = {id, start, finish, label};
      if (Slot* s = slot_at(start)) *s = {sa.edge, 0};
      if (Slot* s = slot_at(finish)) *s = {sa.edge, 1};
    }
  }

  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (alive[k]) out.edges.push_back(edges[k]);
  }
  for (int c : d.crossings) {
    if (!state.count(c)) out.crossings.push_back(c);
  }
  for (int c : d.marked) {
    if (!state.count(c)) out.marked.push_back(c);
  }
  out.normalize();
  return out;
}

}  // namespace skein
