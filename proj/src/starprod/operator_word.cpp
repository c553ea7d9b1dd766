#include "skein/starprod/operator_word.hpp"

#include "skein/diagram/diagram.hpp"
#include "skein/error.hpp"
#include "skein/exactalg/phi.hpp"
#include "skein/statesum/chi.hpp"

namespace skein {

int OperatorWord::weight() const {
  int w = 0;
  for (const auto& s : steps) w += 2 * static_cast<int>(s.loop_order) + std::max(0, s.q.total_degree());
  return w;
}

RationalVector apply_operator_word(const OperatorWord& word, const CurveClass& beta) {
  RationalVector x(beta, Rational(1));
  for (const auto& step : word.steps) {
    RationalVector next;
    const LoopWeightFn phi = phi_table(step.loop_order);
    for (const auto& [cls, c] : x) {
      MarkedDiagram d = representative(cls);
      if (step.alpha) d = superpose(representative(*step.alpha), d, ProductMode::Strong);
      next += phi_star(phi, chi_apply(step.q, d)) * c;
    }
    x = std::move(next);
  }
  return x;
}

RationalVector phi_of_stack(unsigned j, const std::vector<CurveClass>& stack) {
  if (stack.empty()) throw Error(ErrorCode::InvalidArgument, "empty stack");
  MarkedDiagram d = representative(stack.back());
  for (auto it = stack.rbegin() + 1; it != stack.rend(); ++it) d = superpose(representative(*it), d, ProductMode::Strong);
  return phi_star(phi_table(j), d);
}

CheckReport phi0_multiplicativity_check(const MarkedDiagram& top, const MarkedDiagram& bottom) {
  CheckReport r("phi_0 multiplicativity");
  const LoopWeightFn phi0 = phi_table(0);
  const RationalVector whole = phi_star(phi0, superpose(top.promoted(), bottom.promoted(), ProductMode::Strong));
  // phi_0(top) phi_0(bottom): basis products, each through its own product diagram.
  RationalVector split;
  for (const auto& [a, ca] : phi_star(phi0, top.promoted())) {
    for (const auto& [b, cb] : phi_star(phi0, bottom.promoted())) {
      split += phi_star(phi0, superpose(representative(a), representative(b), ProductMode::Strong)) * (ca * cb);
    }
  }
  r.expect(whole == split, "phi_0(A > B) = " + whole.to_string() + " but phi_0(A) phi_0(B) = " + split.to_string());
  const RationalVector swapped = phi_star(phi0, superpose(bottom.promoted(), top.promoted(), ProductMode::Strong));
  r.expect(whole == swapped, "phi_0(A > B) != phi_0(B > A)");
  return r;
}

CheckReport differentiability_witness() {
  CheckReport r("differentiability witness");
  const CurveClass a = CurveClass::torus(1, 0);
  const CurveClass b = CurveClass::torus(1, 0);
  const CurveClass b2 = CurveClass::torus(0, 1);
  r.absorb(phi0_multiplicativity_check(representative(a), representative(b2)));
  r.absorb(phi0_multiplicativity_check(representative(CurveClass::torus(2, 0)), representative(b2)));

  const RationalVector bb2 = phi_of_stack(1, {b, b2});
  const RationalVector ab2 = phi_of_stack(1, {a, b2});
  const RationalVector abb2 = phi_of_stack(1, {a, b, b2});
  r.expect(bb2.is_zero(), "phi_1(b > b') = " + bb2.to_string() + ", expected 0");
  r.expect(ab2.is_zero(), "phi_1(a > b') = " + ab2.to_string() + ", expected 0");
  r.expect(!abb2.is_zero(), "phi_1(a > b > b') = 0, expected nonzero");
  r.note("phi_1(a > b > b') = " + abb2.to_string());
  return r;
}

}  // namespace skein
