#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace skein {

enum class SurfaceKind { Disk, Annulus, Torus };

/// Disk(m) with m marked boundary points, the annulus, or the torus.
struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::Torus;
  int boundary_points = 0;  // Disk only; even, >= 0

  static SurfaceSpec disk(int m) { return {SurfaceKind::Disk, m}; }
  static SurfaceSpec annulus() { return {SurfaceKind::Annulus, 0}; }
  static SurfaceSpec torus() { return {SurfaceKind::Torus, 0}; }

  /// Throws MalformedDiagram for odd or negative boundary counts.
  void validate() const;
  std::string to_string() const;

  friend auto operator<=>(const SurfaceSpec&, const SurfaceSpec&) = default;
};

/// First homology label. Disk: always (0,0); annulus: winding in `a`, `b` unused;
/// torus: the pair (a, b).
struct HomologyClass {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool is_zero() const { return a == 0 && b == 0; }
  HomologyClass operator-() const { return {-a, -b}; }
  HomologyClass& operator+=(const HomologyClass& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  HomologyClass& operator-=(const HomologyClass& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  friend HomologyClass operator+(HomologyClass x, const HomologyClass& y) { return x += y; }
  friend HomologyClass operator-(HomologyClass x, const HomologyClass& y) { return x -= y; }
  friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;
};

/// Unoriented class of a closed component: the sign is fixed canonically.
HomologyClass canonical_loop_class(SurfaceKind kind, HomologyClass h);

/// A basis element of the skein module: an isotopy class of curve system
/// without trivial closed components.
///
/// Disk: a planar perfect matching of the boundary points 1..m.
/// Annulus: n parallel copies of the core.
/// Torus: the normalized homology pair (a, b) of n parallel copies of a primitive
/// class; (0,0) is the empty system.
class CurveClass {
 public:
  using Chord = std::pair<int, int>;

  CurveClass() = default;

  static CurveClass empty(SurfaceKind kind);
  /// Throws InvalidArgument unless the chords form a planar perfect matching.
  static CurveClass disk(std::vector<Chord> chords);
  static CurveClass annulus(std::int64_t copies);
  /// (0,0) is the empty class; otherwise the sign is normalized.
  static CurveClass torus(std::int64_t a, std::int64_t b);

  SurfaceKind kind() const { return kind_; }
  bool is_empty() const;
  const std::vector<Chord>& chords() const { return chords_; }
  std::int64_t copies() const;  // annulus copies or torus multiplicity gcd(a,b)
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }

  /// "∅", "core^n", "(a,b)", "match[(1,4),(2,3)]".
  std::string to_string() const;

  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;

 private:
  SurfaceKind kind_ = SurfaceKind::Torus;
  std::vector<Chord> chords_;
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

/// (0,0) -> empty; otherwise (a,b) or (-a,-b), whichever has a > 0 or (a = 0, b > 0).
CurveClass normalize_torus_class(std::int64_t a, std::int64_t b);

/// Parses the canonical rendering back into a class of the given surface kind.
CurveClass parse_curve_class(SurfaceKind kind, const std::string& text);

struct ComponentSummary {
  int trivial = 0;  // mu
  CurveClass essential;
};

/// Splits the closed components of a crossingless diagram into trivial circles and
/// the essential curve system. Throws NonParallelComponents when the nonzero
/// classes cannot be disjoint embedded circles.
ComponentSummary classify_components(const SurfaceSpec& surface, const std::vector<HomologyClass>& classes);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace skein
