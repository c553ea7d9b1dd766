#include <doctest.h>

#include "skein/diagram/diagram.hpp"
#include "skein/diagram/geodesic.hpp"
#include "skein/diagram/resolver.hpp"
#include "skein/error.hpp"

using namespace skein;

namespace {

KState uniform_state(const MarkedDiagram& d, std::uint64_t mask) {
  KState s;
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    s[d.crossings[k]] = ((mask >> k) & 1) ? Marker::Infinity : Marker::Zero;
  }
  return s;
}

// One crossing in the disk with boundary points 1..4.
const char* kDiskCrossing = R"({
  "surface": {"kind": {"disk": 4}},
  "crossings": [{"id": 0}],
  "edges": [
    {"id": 0, "tail": ["bnd", 1], "head": [0, 2], "h": null},
    {"id": 1, "tail": [0, 0], "head": ["bnd", 3], "h": null},
    {"id": 2, "tail": ["bnd", 2], "head": [0, 1], "h": null},
    {"id": 3, "tail": [0, 3], "head": ["bnd", 4], "h": null}
  ],
  "free_loops": [],
  "marked": "all"
})";

}  // namespace

TEST_CASE("braid closures are valid and sized by the word") {
  const MarkedDiagram d = from_braid(3, {1, -2, 1, 2});
  CHECK_NOTHROW(validate(d));
  CHECK(d.crossings.size() == 4);
  CHECK(d.is_real());
  CHECK_THROWS_AS(from_braid(2, {2}), Error);
  const MarkedDiagram unknot = from_braid(1, {});
  CHECK(unknot.crossings.empty());
  CHECK(unknot.free_loops.size() == 1);
}

TEST_CASE("smoothing removes crossings and shrinks the marked set") {
  const MarkedDiagram d = from_braid(2, {1, 1, 1});
  const MarkedDiagram s = smooth(d, KState{{d.crossings[0], Marker::Zero}});
  CHECK(s.crossings.size() == 2);
  CHECK(s.marked.size() == 2);
  CHECK_NOTHROW(validate(s));
  const MarkedDiagram unmarked = d.with_marked({d.crossings[1]});
  CHECK_THROWS_AS(smooth(unmarked, KState{{d.crossings[0], Marker::Zero}}), Error);
}

TEST_CASE("smoothing in two steps equals smoothing at once") {
  const MarkedDiagram d = from_braid(3, {1, 2, -1, 2});
  const KState a{{d.crossings[0], Marker::Infinity}};
  const KState b{{d.crossings[2], Marker::Zero}, {d.crossings[3], Marker::Infinity}};
  KState both = a;
  both.insert(b.begin(), b.end());
  CHECK(smooth(smooth(d, a), b) == smooth(d, both));
}

TEST_CASE("tau is an involution exchanging 0 and infinity") {
  const MarkedDiagram d = from_braid(3, {1, -2, 2, 1});
  CHECK(tau(tau(d)) == d);
  const KState zero{{d.crossings[1], Marker::Zero}};
  const KState inf{{d.crossings[1], Marker::Infinity}};
  CHECK(tau(smooth(d, zero)) == smooth(tau(d), inf));
}

TEST_CASE("resolution of kink chains") {
  const MarkedDiagram k = kink_chain(3);
  CHECK(k.crossings.size() == 3);
  // l infinity-markers leave l + 1 circles.
  CHECK(resolve(k, uniform_state(k, 0)).trivial == 1);
  CHECK(resolve(k, uniform_state(k, 5)).trivial == 3);
  CHECK(resolve(k, uniform_state(k, 7)).trivial == 4);
  const MarkedDiagram empty = kink_chain(0);
  CHECK(empty.crossings.empty());
  CHECK(classify_crossingless(empty).trivial == 1);
}

TEST_CASE("compiled resolver agrees with resolve") {
  for (const MarkedDiagram& d : {from_braid(3, {1, -2, 1, 2, 2}), kink_chain(4),
                                 superpose(torus_multicurve(2, 1, 0), torus_multicurve(1, 1, 2), ProductMode::Strong)}) {
    const StateResolver r(d);
    for (std::uint64_t m = 0; m < r.state_count(); ++m) {
      const Resolution a = r.resolve(m);
      const Resolution b = resolve(d, uniform_state(d, m));
      CHECK(a.trivial == b.trivial);
      CHECK(a.essential == b.essential);
      CHECK(a.zeros + a.infinities == static_cast<int>(d.crossings.size()));
    }
  }
}

TEST_CASE("two parallel curves over a transverse one have no trivial circle in any state") {
  const MarkedDiagram d = superpose(torus_multicurve(2, 1, 0), torus_multicurve(1, 0, 1), ProductMode::Strong);
  REQUIRE(d.crossings.size() == 2);
  for (std::uint64_t m = 0; m < 4; ++m) CHECK(resolve(d, uniform_state(d, m)).trivial == 0);
  CHECK(resolve(d, uniform_state(d, 0)).essential != resolve(d, uniform_state(d, 3)).essential);
}

TEST_CASE("torus geodesics cross |det| times") {
  for (auto [p, q, r, s] : std::vector<std::array<int, 4>>{{1, 0, 0, 1}, {1, 0, 1, 3}, {2, 1, 1, 2}, {1, 1, 1, -1}}) {
    const MarkedDiagram d = superpose(torus_multicurve(1, p, q), torus_multicurve(1, r, s), ProductMode::Strong);
    CHECK(static_cast<int>(d.crossings.size()) == std::abs(p * s - q * r));
    CHECK_NOTHROW(validate(d));
  }
  CHECK_THROWS_AS(torus_multicurve(1, 2, 2), Error);
  const MarkedDiagram parallel = torus_multicurve(3, 1, 2);
  CHECK(parallel.crossings.empty());
  CHECK(classify_crossingless(parallel).essential == CurveClass::torus(3, 6));
}

TEST_CASE("weak superposition leaves new crossings unmarked") {
  const MarkedDiagram weak = superpose(torus_multicurve(1, 1, 0), torus_multicurve(1, 1, 2), ProductMode::Weak);
  CHECK(weak.crossings.size() == 2);
  CHECK(weak.marked.empty());
  const MarkedDiagram annulus = superpose(from_braid(2, {1}), from_braid(2, {1, 1}), ProductMode::Weak);
  CHECK(annulus.crossings.size() == 3);
  CHECK(annulus.marked.size() == 3);
}

TEST_CASE("SL(2,Z) acts on diagrams and classes") {
  const IntMatrix2 m{{{1, 1}, {0, 1}}};
  CHECK(sl2z_act(m, CurveClass::torus(0, 1)) == CurveClass::torus(1, 1));
  const IntMatrix2 bad{{{2, 0}, {0, 1}}};
  CHECK_THROWS_AS(sl2z_act(bad, CurveClass::torus(1, 0)), Error);
  const MarkedDiagram d = superpose(torus_multicurve(1, 1, 0), torus_multicurve(1, 0, 1), ProductMode::Strong);
  const MarkedDiagram md = sl2z_act(m, d);
  CHECK(md.crossings.size() == 1);
  CHECK(classify_crossingless(sl2z_act(m, torus_multicurve(1, 0, 1))).essential == CurveClass::torus(1, 1));
}

TEST_CASE("diagram files round-trip") {
  for (const MarkedDiagram& d :
       {from_braid(3, {1, -2, 1}), kink_chain(2), torus_multicurve(2, 1, 1),
        superpose(torus_multicurve(1, 1, 0), torus_multicurve(1, 1, 2), ProductMode::Weak),
        from_braid(2, {1, 1}).with_marked({0})}) {
    MarkedDiagram plain = d;
    plain.geodesic.reset();
    CHECK(diagram_from_json(diagram_to_json(d)) == plain);
  }
  CHECK_THROWS_AS(diagram_from_json("{\"surface\": 3}"), Error);
  CHECK_THROWS_AS(diagram_from_json("not json"), Error);
}

TEST_CASE("one crossing in the disk resolves into the two planar matchings") {
  const MarkedDiagram d = diagram_from_json(kDiskCrossing);
  const Resolution zero = resolve(d, uniform_state(d, 0));
  const Resolution inf = resolve(d, uniform_state(d, 1));
  CHECK(zero.essential == CurveClass::disk({{1, 4}, {2, 3}}));
  CHECK(inf.essential == CurveClass::disk({{1, 2}, {3, 4}}));
  CHECK(zero.trivial == 0);
}
