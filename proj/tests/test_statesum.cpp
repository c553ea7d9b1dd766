#include <doctest.h>

#include <filesystem>

#include "skein/diagram/geodesic.hpp"
#include "skein/error.hpp"
#include "skein/exactalg/phi.hpp"
#include "skein/statesum/bracket.hpp"
#include "skein/statesum/checks.hpp"
#include "skein/statesum/chi.hpp"
#include "skein/statesum/expansion.hpp"
#include "skein/statesum/poly_table.hpp"

using namespace skein;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<int, int>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p += LaurentPoly::monomial(e, Rational(c));
  return p;
}

MarkedDiagram cross_10_01() {
  return superpose(torus_multicurve(1, 1, 0), torus_multicurve(1, 0, 1), ProductMode::Strong);
}

}  // namespace

TEST_CASE("brackets of small diagrams") {
  const CurveClass empty = CurveClass::empty(SurfaceKind::Disk);
  // A single kink: -t^-1... computed from the two states.
  CHECK(bracket(kink_chain(1)) == LaurentVector(empty, lp({{-1, -1}, {-5, -1}})));
  CHECK(bracket(kink_chain(0)) == LaurentVector(empty, lp({{2, -1}, {-2, -1}})));
  LaurentVector cross;
  cross.add(CurveClass::torus(1, -1), lp({{1, -1}}));
  cross.add(CurveClass::torus(1, 1), lp({{-1, -1}}));
  CHECK(bracket(cross_10_01()) == cross);
}

TEST_CASE("state census counts every state") {
  const MarkedDiagram d = from_braid(3, {1, 2, -1});
  std::int64_t total = 0;
  for (const auto& [cls, counts] : state_census(d)) {
    for (const auto& [key, n] : counts) total += n;
  }
  CHECK(total == 8);
  CHECK_THROWS_AS(bracket(d.with_marked({})), Error);
}

TEST_CASE("order 0 and 1 oracles") {
  for (const MarkedDiagram& d : {kink_chain(3), from_braid(2, {1, 1, 1}), from_braid(3, {1, -2, 1, 2}), cross_10_01()}) {
    const auto orders = bracket_orders(d, 1);
    CHECK(orders[0] == t0_bracket(d));
    CHECK(orders[1] == bfk_first_order(d));
  }
  // The crossing of (1,0) over (0,1) at t = 1: -(1,1) - (1,-1).
  RationalVector want;
  want.add(CurveClass::torus(1, 1), Rational(-1));
  want.add(CurveClass::torus(1, -1), Rational(-1));
  CHECK(t0_bracket(cross_10_01()) == want);
}

TEST_CASE("chi of constants and of degree beyond |C|") {
  const MarkedDiagram d = from_braid(2, {1, 1});
  CHECK(chi_apply(PolyZW(Rational(3)), d) == FormalDiagramSum(Rational(3), d));
  CHECK(chi_apply(parse_poly_zw("w^3"), d).is_zero());
  CHECK(state_weights(parse_poly_zw("w^2 - 3*z*w"), 2) == std::vector<Rational>{1, -3, 0});
}

TEST_CASE("chi(w - z) projects to the crossing sum") {
  for (const MarkedDiagram& d : {kink_chain(2), from_braid(3, {1, 2, 1}), cross_10_01()}) {
    CHECK(phi_star(phi_table(0), chi_apply(parse_poly_zw("w - z"), d)) == bfk_first_order(d));
  }
}

TEST_CASE("skein relation on one crossing") {
  const MarkedDiagram d = cross_10_01();
  CHECK(skein_relation_residual(parse_poly_zw("w - z"), d, d.crossings[0]).is_zero());
  CHECK_THROWS_AS(skein_relation_residual(parse_poly_zw("w - z + 1"), d, d.crossings[0]), Error);
  const MarkedDiagram b = from_braid(3, {1, 2, -1, 2});
  const PolyZW p = parse_poly_zw("2*w^2 - z*w + 5*z^2");
  CHECK(skein_relation_residual(p, b.with_marked({b.crossings[1], b.crossings[2]}), b.crossings[2]).is_zero());
  CHECK(skein_relation_residual(p, b, b.crossings[2], ResidualMode::ReduceUnmarked).is_zero());
  // With extra marked crossings the literal terms no longer cancel.
  CHECK_FALSE(skein_relation_residual(p, b, b.crossings[2]).is_zero());
}

TEST_CASE("axiom checks") {
  const MarkedDiagram d = from_braid(3, {1, -2, 1});
  CHECK(divergence_check(parse_poly_zw("w^2 + z*w"), d).passed());
  CHECK(grading_check(parse_poly_zw("w^2 - z^2"), d).passed());
  CHECK(vacuum_check(parse_poly_zw("3 + w"), SurfaceSpec::torus()).passed());
  CHECK(weak_product_check(parse_poly_zw("w - z + 2"), from_braid(2, {1}), d).passed());
  CHECK(injectivity_witness_check(parse_poly_zw("w^3 - 2*z^2*w")).passed());
  CHECK(mirror_symmetry_check(d, 3).passed());
  CHECK(divided_power_check(parse_poly_zw("w + z"), parse_poly_zw("w - 1"), d).passed());
  // chi_w chi_w = chi_{2 w^2}, not chi_{w^2}.
  CHECK_FALSE(composition_check(PolyZW::w(), PolyZW::w(), d).passed());
}

TEST_CASE("derived deformation polynomials") {
  DeformationPolyTable table;
  CHECK(table.get(0) == PolyZW(Rational(1)));
  CHECK(table.get(1) == parse_poly_zw("w - z"));
  CHECK(table.get(2) == parse_poly_zw("w^2 - z*w + z^2 + 1/2*w + 1/2*z"));
  CHECK(table.get(3) == parse_poly_zw("w^3 - z*w^2 + z^2*w - z^3 + w^2 - z^2 + 1/6*w - 1/6*z"));
  CHECK(table.get(4).coeff(0, 1) == make_rational(1, 24));
}

TEST_CASE("polynomial table persists atomically") {
  const auto path = std::filesystem::temp_directory_path() / "skein_unit_table.json";
  std::filesystem::remove(path);
  {
    DeformationPolyTable t(path);
    t.up_to(4);
  }
  REQUIRE(std::filesystem::exists(path));
  DeformationPolyTable again(path);
  CHECK(again.entries().size() == 5);
  CHECK(again.get(3) == DeformationPolyTable().get(3));
  std::filesystem::remove(path);
}

TEST_CASE("main theorem on small diagrams") {
  for (const MarkedDiagram& d : {kink_chain(2), from_braid(3, {1, -2, 1, 2}), cross_10_01()}) {
    const auto oracle = bracket_orders(d, 4);
    CHECK(expansion_series(d, 4) == oracle);
    CHECK(expansion_literal(d, 3) == oracle[3]);
    CHECK(expansion(d, 4) == oracle[4]);
  }
}
