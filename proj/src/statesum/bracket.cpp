#include "skein/statesum/bracket.hpp"

#include "skein/diagram/resolver.hpp"
#include "skein/error.hpp"
#include "skein/exactalg/series.hpp"

namespace skein {

namespace {

LaurentPoly state_weight(int exponent, int loops) {
  LaurentPoly w = LaurentPoly::monomial(exponent, Rational(exponent % 2 == 0 ? 1 : -1));
  return w * loop_value().pow(static_cast<unsigned>(loops));
}

}  // namespace

StateCensus state_census(const MarkedDiagram& d) {
  const StateResolver resolver(d);
  StateCensus census;
  for (std::uint64_t mask = 0; mask < resolver.state_count(); ++mask) {
    const Resolution r = resolver.resolve(mask);
    ++census[r.essential][{r.zeros - r.infinities, r.trivial}];
  }
  return census;
}

LaurentVector bracket(const MarkedDiagram& d) {
  LaurentVector out;
  std::map<std::pair<int, int>, LaurentPoly> weights;
  for (const auto& [cls, counts] : state_census(d)) {
    LaurentPoly sum;
    for (const auto& [key, n] : counts) {
      auto it = weights.find(key);
      if (it == weights.end()) it = weights.emplace(key, state_weight(key.first, key.second)).first;
      sum += it->second * Rational(n);
    }
    out.add(cls, sum);
  }
  return out;
}

std::vector<RationalVector> bracket_orders(const MarkedDiagram& d, int max_order) {
  if (max_order < 0) throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
  const auto order = static_cast<unsigned>(max_order);
  std::vector<RationalVector> out(order + 1);
  std::map<std::pair<int, int>, TruncSeries> weights;
  for (const auto& [cls, counts] : state_census(d)) {
    TruncSeries sum(order);
    for (const auto& [key, n] : counts) {
      auto it = weights.find(key);
      if (it == weights.end()) {
        it = weights.emplace(key, laurent_to_series(state_weight(key.first, key.second), order)).first;
      }
      sum += it->second * Rational(n);
    }
    for (unsigned k = 0; k <= order; ++k) out[k].add(cls, sum.coeff(k));
  }
  return out;
}

RationalVector bracket_order(const MarkedDiagram& d, int k) { return bracket_orders(d, k).at(k); }

SeriesVector laurent_to_series(const LaurentVector& v, unsigned order) {
  return v.map([order](const LaurentPoly& p) { return laurent_to_series(p, order); });
}

MarkedDiagram smooth_at(const MarkedDiagram& d, int crossing, Marker m) { return smooth(d, KState{{crossing, m}}); }

RationalVector t0_bracket(const MarkedDiagram& d) {
  if (!d.is_real()) throw Error(ErrorCode::NotRealDiagram, "t0_bracket needs C = all crossings");
  if (d.crossings.empty()) {
    const Resolution r = classify_crossingless(d);
    Rational value = 1;
    for (int i = 0; i < r.trivial; ++i) value *= -2;
    return RationalVector(r.essential, value);
  }
  const int p = d.crossings.front();
  RationalVector out = t0_bracket(smooth_at(d, p, Marker::Zero));
  out += t0_bracket(smooth_at(d, p, Marker::Infinity));
  return out * Rational(-1);
}

RationalVector bfk_first_order(const MarkedDiagram& d) {
  if (!d.is_real()) throw Error(ErrorCode::NotRealDiagram, "bfk_first_order needs C = all crossings");
  RationalVector out;
  for (int p : d.crossings) {
    out += t0_bracket(smooth_at(d, p, Marker::Infinity));
    out -= t0_bracket(smooth_at(d, p, Marker::Zero));
  }
  return out;
}

}  // namespace skein
