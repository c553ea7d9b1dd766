#include "skein/starprod/star.hpp"

#include "skein/error.hpp"
#include "skein/statesum/bracket.hpp"
#include "skein/statesum/expansion.hpp"

namespace skein {

namespace {

void check_kind(const CurveClass& a, const CurveClass& b) {
  if (a.kind() != b.kind()) throw Error(ErrorCode::SurfaceMismatch, "classes live on different surfaces");
  if (a.kind() == SurfaceKind::Disk && !(a.is_empty() && b.is_empty())) {
    throw Error(ErrorCode::UnsupportedSuperposition, "star product on the disk");
  }
}

std::string pair_name(const CurveClass& a, const CurveClass& b) { return a.to_string() + " * " + b.to_string(); }

}  // namespace

MarkedDiagram product_diagram(const CurveClass& a, const CurveClass& b) {
  check_kind(a, b);
  return superpose(representative(a), representative(b), ProductMode::Strong);
}

LaurentVector star_laurent(const CurveClass& a, const CurveClass& b) { return bracket(product_diagram(a, b)); }

SeriesVector star(const CurveClass& a, const CurveClass& b, unsigned order) {
  return laurent_to_series(star_laurent(a, b), order);
}

SeriesVector star(const SeriesVector& a, const SeriesVector& b, unsigned order) {
  SeriesVector out;
  for (const auto& [ca, sa] : a) {
    for (const auto& [cb, sb] : b) {
      const TruncSeries coeff = sa * sb;
      for (const auto& [c, s] : star(ca, cb, order)) out.add(c, coeff * s);
    }
  }
  return out;
}

std::vector<RationalVector> lambda_series(const CurveClass& a, const CurveClass& b, int max_order) {
  const MarkedDiagram d = product_diagram(a, b);
  std::vector<RationalVector> oracle = bracket_orders(d, max_order);
  const std::vector<RationalVector> formula = expansion_series(d, max_order);
  for (int k = 0; k <= max_order; ++k) {
    if (oracle[k] != formula[k]) {
      throw Error(ErrorCode::TheoremViolation, "lambda_" + std::to_string(k) + "(" + pair_name(a, b) +
                                                   "): bracket " + oracle[k].to_string() + " vs resolution formula " +
                                                   formula[k].to_string());
    }
  }
  return oracle;
}

RationalVector lambda_k(const CurveClass& a, const CurveClass& b, int k) { return lambda_series(a, b, k).at(k); }

CheckReport goldman_check(const CurveClass& a, const CurveClass& b) {
  CheckReport r("goldman " + pair_name(a, b));
  const RationalVector ab = lambda_k(a, b, 1);
  const RationalVector ba = lambda_k(b, a, 1);
  r.expect(ab == bfk_first_order(product_diagram(a, b)), "lambda_1 differs from the crossing sum");
  r.expect(ba == -ab, "lambda_1 is not antisymmetric");
  return r;
}

CheckReport hermitian_check(const CurveClass& a, const CurveClass& b, int max_order) {
  CheckReport r("hermitian " + pair_name(a, b));
  const auto ab = lambda_series(a, b, max_order);
  const auto ba = lambda_series(b, a, max_order);
  for (int k = 0; k <= max_order; ++k) {
    r.expect(ba[k] == ab[k] * Rational(sign_pow(k)), "order " + std::to_string(k));
  }
  return r;
}

CheckReport associativity_check(const CurveClass& a, const CurveClass& b, const CurveClass& c, int max_order) {
  CheckReport r("associativity (" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")");
  const auto order = static_cast<unsigned>(max_order);
  const SeriesVector one_a(a, TruncSeries::constant(order, 1));
  const SeriesVector one_c(c, TruncSeries::constant(order, 1));
  const SeriesVector left = star(star(a, b, order), one_c, order);
  const SeriesVector right = star(one_a, star(b, c, order), order);
  for (unsigned k = 0; k <= order; ++k) {
    auto part = [k](const SeriesVector& v) { return v.map([k](const TruncSeries& s) { return Rational(s.coeff(k)); }); };
    r.expect(part(left) == part(right), "order " + std::to_string(k));
  }
  return r;
}

CheckReport sl2z_equivariance_check(const IntMatrix2& m, const CurveClass& a, const CurveClass& b, int max_order) {
  CheckReport r("SL(2,Z) " + pair_name(a, b));
  auto act = [&m](const CurveClass& c) { return sl2z_act(m, c); };
  const auto base = lambda_series(a, b, max_order);
  const auto moved = lambda_series(act(a), act(b), max_order);
  for (int k = 0; k <= max_order; ++k) {
    r.expect(moved[k] == base[k].map_classes(act), "order " + std::to_string(k));
  }
  const MarkedDiagram d = product_diagram(a, b);
  r.expect(bracket(sl2z_act(m, d)) == bracket(d).map_classes(act), "naturality on the product diagram");
  return r;
}

}  // namespace skein
