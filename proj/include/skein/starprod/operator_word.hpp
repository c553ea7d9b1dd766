#pragma once

#include <optional>
#include <vector>

#include "skein/diagram/diagram.hpp"
#include "skein/exactalg/poly_zw.hpp"
#include "skein/report.hpp"
#include "skein/surface/skein_vector.hpp"

namespace skein {

/// One stage x -> (phi_r)_* chi_Q(alpha > x). With no alpha the stage acts on x itself.
struct OperatorStep {
  unsigned loop_order = 0;
  PolyZW q = PolyZW(Rational(1));
  std::optional<CurveClass> alpha;
};

/// Stages applied first to last.
struct OperatorWord {
  std::vector<OperatorStep> steps;

  /// Sum of 2 r + deg Q.
  int weight() const;
};

/// Evaluates the word on a basis class. Each stage superposes (strongly) a
/// representative of alpha over a representative of every class in the current value.
RationalVector apply_operator_word(const OperatorWord& word, const CurveClass& beta);

/// (phi_j)_* of the strong product diagram a_1 > a_2 > ... > a_n (first on top).
RationalVector phi_of_stack(unsigned j, const std::vector<CurveClass>& stack);

/// (i) phi_0 multiplicativity on superpositions of crossingless diagrams;
/// (ii) the witness a = b = (1,0), b' = (0,1): phi_1(b > b') = phi_1(a > b') = 0 and
/// phi_1(a > b > b') != 0.
CheckReport differentiability_witness();

/// Part (i) alone on a given pair of crossingless diagrams (trivial loops allowed).
CheckReport phi0_multiplicativity_check(const MarkedDiagram& top, const MarkedDiagram& bottom);

}  // namespace skein
