#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "skein/diagram/diagram.hpp"
#include "skein/exactalg/rational.hpp"

namespace skein {

/// Closed geodesic {q x - p y = offset} on R^2 / Z^2, for a primitive canonical (p, q).
/// Lines on a higher layer pass over lines on a lower one.
struct GeodesicLine {
  std::int64_t p = 1;
  std::int64_t q = 0;
  Rational offset;  // in [0, 1)
  int layer = 0;
};

struct GeodesicCrossing {
  int over_line = 0;
  int under_line = 0;
  std::array<Rational, 2> point;  // reduced into [0,1)^2
};

/// Line data behind a torus diagram built by superposition. Crossing ids index
/// `crossings` (sorted lexicographically by point).
struct GeodesicArrangement {
  std::vector<GeodesicLine> lines;
  std::vector<GeodesicCrossing> crossings;
};

/// n parallel (p,q) loops at offsets base_offset + i/n (mod 1).
MarkedDiagram torus_multicurve(int n, std::int64_t p, std::int64_t q, const Rational& base_offset);

/// Line data of a torus diagram: its recorded arrangement, or the parallel family of
/// a crossingless multicurve. Throws UnsupportedSuperposition otherwise.
GeodesicArrangement arrangement_of(const MarkedDiagram& d);

/// Torus superposition by geodesic line arrangements.
MarkedDiagram superpose_torus(const MarkedDiagram& over, const MarkedDiagram& under, ProductMode mode);

}  // namespace skein
