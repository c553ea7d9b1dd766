#include "skein/diagram/resolver.hpp"

#include <algorithm>

#include "skein/error.hpp"

namespace skein {

namespace {

// Port joined to p by the 0- and infinity-smoothings.
constexpr int kPartner[2][4] = {{1, 0, 3, 2}, {3, 2, 1, 0}};

}  // namespace

StateResolver::StateResolver(const MarkedDiagram& d) : surface_(d.surface), free_loops_(d.free_loops) {
  if (!d.is_real()) throw Error(ErrorCode::NotRealDiagram, "state enumeration needs C = all crossings");
  crossing_count_ = d.crossings.size();
  if (crossing_count_ > 62) throw Error(ErrorCode::InvalidArgument, "too many crossings for bitmask enumeration");
  auto slot = [&](const Endpoint& p) {
    if (p.is_boundary()) return -p.port;
    const auto k = std::lower_bound(d.crossings.begin(), d.crossings.end(), p.crossing) - d.crossings.begin();
    return static_cast<int>(k) * 4 + p.port;
  };
  slot_end_.assign(crossing_count_ * 4, -1);
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const int t = slot(d.edges[e].tail), h = slot(d.edges[e].head);
    tail_slot_.push_back(t);
    head_slot_.push_back(h);
    label_.push_back(d.edges[e].label);
    if (t >= 0) slot_end_[t] = static_cast<int>(e) * 2;
    if (h >= 0) slot_end_[h] = static_cast<int>(e) * 2 + 1;
  }
}

Resolution StateResolver::resolve(std::uint64_t mask) const {
  const std::size_t ne = tail_slot_.size();
  std::vector<char> seen(ne, 0);
  std::vector<HomologyClass> loops = free_loops_;
  std::vector<CurveClass::Chord> chords;

  // Follows the strand leaving `slot`; returns the next (edge, forward) pair, or
  // edge = -1 at a boundary point.
  auto step = [&](int slot, int& edge, bool& forward) {
    const int k = slot / 4, p = slot % 4;
    const int q = kPartner[(mask >> k) & 1][p];
    const int end = slot_end_[k * 4 + q];
    edge = end / 2;
    forward = (end % 2) == 0;
  };

  // Arcs first: start at every boundary end not yet traversed.
  for (std::size_t e0 = 0; e0 < ne; ++e0) {
    if (seen[e0]) continue;
    const bool tail_b = tail_slot_[e0] < 0;
    const bool head_b = head_slot_[e0] < 0;
    if (!tail_b && !head_b) continue;
    int edge = static_cast<int>(e0);
    bool forward = tail_b;
    const int start_point = tail_b ? -tail_slot_[e0] : -head_slot_[e0];
    while (true) {
      seen[edge] = 1;
      const int arrive = forward ? head_slot_[edge] : tail_slot_[edge];
      if (arrive < 0) {
        chords.emplace_back(start_point, -arrive);
        break;
      }
      step(arrive, edge, forward);
    }
  }
  // Closed components.
  for (std::size_t e0 = 0; e0 < ne; ++e0) {
    if (seen[e0]) continue;
    HomologyClass sum;
    int edge = static_cast<int>(e0);
    bool forward = true;
    do {
      seen[edge] = 1;
      sum += forward ? label_[edge] : -label_[edge];
      step(forward ? head_slot_[edge] : tail_slot_[edge], edge, forward);
    } while (edge != static_cast<int>(e0));
    loops.push_back(sum);
  }

  const ComponentSummary s = classify_components(surface_, loops);
  Resolution r;
  r.trivial = s.trivial;
  r.essential = s.essential;
  if (surface_.kind == SurfaceKind::Disk && !chords.empty()) r.essential = CurveClass::disk(std::move(chords));
  r.infinities = __builtin_popcountll(mask);
  r.zeros = static_cast<int>(crossing_count_) - r.infinities;
  return r;
}

}  // namespace skein
