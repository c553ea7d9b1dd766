#pragma once

#include <cstdint>
#include <vector>

#include "skein/diagram/diagram.hpp"

namespace skein {

/// A real diagram compiled into flat port tables for full-state enumeration.
///
/// Bit k of a state mask is the marker at the k-th crossing in sorted id order
/// (1 = infinity). Supports up to 62 crossings.
class StateResolver {
 public:
  explicit StateResolver(const MarkedDiagram& d);

  std::size_t crossing_count() const { return crossing_count_; }
  std::uint64_t state_count() const { return std::uint64_t{1} << crossing_count_; }

  /// Same result as resolve(d, state of mask), without building intermediate diagrams.
  Resolution resolve(std::uint64_t mask) const;

 private:
  SurfaceSpec surface_;
  std::size_t crossing_count_ = 0;
  // Per edge: slot of tail and head; slot = 4*crossing_index + port, or -point for
  // boundary point `point`.
  std::vector<int> tail_slot_, head_slot_;
  std::vector<HomologyClass> label_;
  // Per crossing slot: edge * 2 + end (0 tail, 1 head).
  std::vector<int> slot_end_;
  std::vector<HomologyClass> free_loops_;
};

}  // namespace skein
