#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skein/surface/surface.hpp"

namespace skein {

struct GeodesicArrangement;  // diagram/geodesic.hpp

/// One end of an edge: a crossing port or a marked boundary point (disk only).
///
/// Ports are numbered 0..3 counterclockwise; the over-strand occupies ports 0 and 2.
struct Endpoint {
  int crossing = -1;  // -1 for a boundary point
  int port = 0;       // crossing port, or boundary point index 1..m

  static Endpoint at(int crossing_id, int port_index) { return {crossing_id, port_index}; }
  static Endpoint boundary(int point) { return {-1, point}; }
  bool is_boundary() const { return crossing < 0; }

  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Edge {
  int id = 0;
  Endpoint tail;
  Endpoint head;
  HomologyClass label;  // measured along tail -> head

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Marker : unsigned char { Zero = 0, Infinity = 1 };

/// Partial state: markers on a subset of the marked crossings (crossing id -> marker).
using KState = std::map<int, Marker>;

/// A diagram [D, C] on a supported surface.
///
/// Structural identity covers surface, crossings, edges, free loops and the marked
/// set. `geodesic` records how a torus superposition was built; it is provenance,
/// not part of identity, and is dropped by any operation that changes the geometry.
struct MarkedDiagram {
  SurfaceSpec surface;
  std::vector<int> crossings;             // sorted ids
  std::vector<Edge> edges;                // sorted by id
  std::vector<HomologyClass> free_loops;  // canonical classes, sorted
  std::vector<int> marked;                // sorted subset of crossings
  std::shared_ptr<const GeodesicArrangement> geodesic;

  bool is_real() const { return marked == crossings; }
  bool is_crossingless() const { return crossings.empty(); }
  std::size_t crossing_count() const { return crossings.size(); }
  bool is_marked(int crossing_id) const;
  const Edge* find_edge(int id) const;

  /// Restores sorted order and canonical loop classes after direct construction.
  void normalize();
  /// Copy with C = all crossings.
  MarkedDiagram promoted() const;
  /// Copy with the given marked set (sorted, must be a subset of crossings).
  MarkedDiagram with_marked(std::vector<int> marked_ids) const;

  friend bool operator==(const MarkedDiagram& x, const MarkedDiagram& y);
  friend std::strong_ordering operator<=>(const MarkedDiagram& x, const MarkedDiagram& y);
};

/// Throws MalformedDiagram naming the first violated structural invariant.
void validate(const MarkedDiagram& d);

/// Smooths the crossings in the domain of `state`. 0 joins ports (0,1),(2,3);
/// infinity joins (0,3),(1,2). Merged edge chains keep the smallest constituent id and
/// that edge's orientation; closed chains become free loops. Throws
/// StateOutsideMarkedSet if the state touches an unmarked or unknown crossing.
MarkedDiagram smooth(const MarkedDiagram& d, const KState& state);

/// Rotates each crossing's port labels so that port 0 carries the smaller of the two
/// over-strand edge ends. Leaves the diagram's geometry unchanged.
MarkedDiagram canonical_ports(MarkedDiagram d);

/// Crossing change at every marked crossing.
MarkedDiagram tau(const MarkedDiagram& d);

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;

/// Mapping class action on a torus diagram: all homology labels transformed by M.
/// Throws NotUnimodular unless det M = 1, SurfaceMismatch off the torus.
MarkedDiagram sl2z_act(const IntMatrix2& m, const MarkedDiagram& d);
CurveClass sl2z_act(const IntMatrix2& m, const CurveClass& c);

struct Resolution {
  int zeros = 0;      // zeta
  int infinities = 0; // iota
  int trivial = 0;    // mu
  CurveClass essential;
};

/// Resolves a real diagram by a full state and classifies the result.
Resolution resolve(const MarkedDiagram& d, const KState& full_state);

/// Classifies a crossingless diagram: trivial loops, essential system, and the induced
/// boundary matching on the disk.
Resolution classify_crossingless(const MarkedDiagram& d);

// ---- constructors -------------------------------------------------------------

/// Closure of a braid word in the annulus. Generator +i puts strand i over strand
/// i+1, -i the reverse. Throws BadGenerator for indices outside 1..n-1.
MarkedDiagram from_braid(int strands, const std::vector<int>& word);

/// n parallel loops of the primitive class (p,q) on the torus, at the default
/// geodesic offsets (see geodesic.hpp for explicit offsets).
MarkedDiagram torus_multicurve(int n, std::int64_t p, std::int64_t q);

/// One closed component on Disk(0) with i kink crossings; a state with l infinity
/// markers resolves into l + 1 trivial circles.
MarkedDiagram kink_chain(int i);

enum class ProductMode { Weak, Strong };

/// D1 placed entirely over D2. Weak leaves new crossings unmarked, strong marks them.
MarkedDiagram superpose(const MarkedDiagram& over, const MarkedDiagram& under, ProductMode mode);

/// Crossingless diagram representing a basis class (standard geodesic representative
/// on the torus).
MarkedDiagram representative(const CurveClass& c);

// ---- file format --------------------------------------------------------------

std::string diagram_to_json(const MarkedDiagram& d);
/// Throws ParseError / MalformedDiagram.
MarkedDiagram diagram_from_json(const std::string& text);

}  // namespace skein
