#include <doctest.h>

#include <map>

#include "skein/starprod/operator_word.hpp"
#include "skein/starprod/star.hpp"
#include "skein/statesum/bracket.hpp"

using namespace skein;

namespace {

// Functions on the character variety of the torus at t = 1: a curve (p,q) is
// -(x^p y^q + x^-p y^-q), n parallel copies its n-th power, a trivial circle -2.
using XY = std::map<std::pair<std::int64_t, std::int64_t>, Rational>;

XY mul(const XY& a, const XY& b) {
  XY out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

XY trace(const CurveClass& c) {
  XY out{{{0, 0}, Rational(1)}};
  if (c.is_empty()) return out;
  const std::int64_t n = c.copies();
  const XY one{{{c.a() / n, c.b() / n}, Rational(-1)}, {{-c.a() / n, -c.b() / n}, Rational(-1)}};
  for (std::int64_t i = 0; i < n; ++i) out = mul(out, one);
  return out;
}

XY trace(const RationalVector& v) {
  XY out;
  for (const auto& [c, r] : v) {
    for (const auto& [e, x] : trace(c)) out[e] += r * x;
  }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

}  // namespace

TEST_CASE("lambda_0 is the product of traces") {
  const std::vector<CurveClass> classes = {CurveClass::torus(1, 0), CurveClass::torus(0, 1), CurveClass::torus(1, 2),
                                           CurveClass::torus(2, 0), CurveClass::torus(1, -1)};
  for (const auto& a : classes) {
    for (const auto& b : classes) {
      CHECK(trace(lambda_k(a, b, 0)) == mul(trace(a), trace(b)));
    }
  }
}

TEST_CASE("star of (1,0) and (0,1)") {
  const CurveClass a = CurveClass::torus(1, 0), b = CurveClass::torus(0, 1);
  const auto l = lambda_series(a, b, 2);
  RationalVector l0, l1;
  l0.add(CurveClass::torus(1, 1), Rational(-1));
  l0.add(CurveClass::torus(1, -1), Rational(-1));
  l1.add(CurveClass::torus(1, 1), Rational(1));
  l1.add(CurveClass::torus(1, -1), Rational(-1));
  CHECK(l[0] == l0);
  CHECK(l[1] == l1);
  CHECK(lambda_k(b, a, 1) == -l[1]);
  CHECK(lambda_k(b, a, 2) == l[2]);
  // The empty class is the unit.
  const SeriesVector unit = star(CurveClass::torus(0, 0), b, 3);
  CHECK(unit.size() == 1);
  CHECK(unit.coeff(b, TruncSeries(3)) == TruncSeries::constant(3, Rational(1)));
}

TEST_CASE("star algebra checks") {
  const CurveClass a = CurveClass::torus(1, 0), b = CurveClass::torus(1, 2), c = CurveClass::torus(0, 1);
  CHECK(goldman_check(a, b).passed());
  CHECK(goldman_check(a, a).passed());
  CHECK(hermitian_check(a, c, 4).passed());
  CHECK(associativity_check(a, c, CurveClass::torus(1, 1), 2).passed());
  CHECK(sl2z_equivariance_check({{{2, 1}, {1, 1}}}, a, b, 3).passed());
}

TEST_CASE("annulus products commute") {
  const CurveClass one = CurveClass::annulus(1), two = CurveClass::annulus(2);
  const auto l = lambda_series(one, two, 3);
  CHECK(l[0] == RationalVector(CurveClass::annulus(3), Rational(1)));
  for (int k = 1; k <= 3; ++k) CHECK(l[k].is_zero());
}

TEST_CASE("operator words") {
  const CurveClass beta = CurveClass::torus(0, 1);
  CHECK(apply_operator_word(OperatorWord{{OperatorStep{}}}, beta) == RationalVector(beta, Rational(1)));
  const OperatorWord w{{OperatorStep{1, parse_poly_zw("w - z"), CurveClass::torus(1, 0)}}};
  CHECK(w.weight() == 3);
  const OperatorWord first{{OperatorStep{0, parse_poly_zw("w - z"), CurveClass::torus(1, 0)}}};
  CHECK(apply_operator_word(first, beta) == lambda_k(CurveClass::torus(1, 0), beta, 1));
}

TEST_CASE("phi_1 of small stacks") {
  const CurveClass a = CurveClass::torus(1, 0), b = CurveClass::torus(0, 1);
  CHECK(phi_of_stack(1, {a, b}).is_zero());
  CHECK(phi_of_stack(1, {a, a, b}).is_zero());
  CHECK(phi0_multiplicativity_check(representative(a), representative(b)).passed());
}
