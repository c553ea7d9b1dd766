#include "skein/verify/suites.hpp"

#include <algorithm>
#include <random>

#include "skein/diagram/geodesic.hpp"
#include "skein/exactalg/phi.hpp"
#include "skein/starprod/operator_word.hpp"
#include "skein/starprod/star.hpp"
#include "skein/statesum/bracket.hpp"
#include "skein/statesum/checks.hpp"
#include "skein/statesum/expansion.hpp"
#include "skein/statesum/poly_table.hpp"
#include "skein/verify/corpus.hpp"

namespace skein {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void absorb_as(CheckReport& r, CheckReport sub, const std::string& label) {
  sub.name = label + " " + sub.name;
  r.absorb(sub);
}

// Coefficients are small nonzero rationals; every monomial of the degree appears.
PolyZW random_homogeneous(Rng& rng, int degree) {
  PolyZW p;
  for (int a = 0; a <= degree; ++a) {
    int num = 0;
    while (num == 0) num = uniform(rng, -5, 5);
    p.add_term(a, degree - a, make_rational(num, uniform(rng, 1, 3)));
  }
  return p;
}

PolyZW random_poly(Rng& rng, int max_degree) {
  PolyZW p;
  for (int d = 0; d <= max_degree; ++d) {
    if (d == max_degree || uniform(rng, 0, 1)) p += random_homogeneous(rng, d);
  }
  return p;
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

// Corpus diagrams with between lo and hi crossings.
std::vector<CorpusDiagram> pool(std::size_t lo, std::size_t hi) {
  std::vector<CorpusDiagram> out;
  for (auto& c : full_corpus()) {
    if (c.diagram.crossings.size() >= lo && c.diagram.crossings.size() <= hi) out.push_back(std::move(c));
  }
  return out;
}

std::vector<CurveClass> torus_pair_classes(const TorusProduct& t) {
  return {CurveClass::torus(t.n * t.a.a, t.n * t.a.b), CurveClass::torus(t.m * t.b.a, t.m * t.b.b)};
}

PolyZW alternating_top(int k) {
  PolyZW p;
  for (int a = 0; a <= k; ++a) p.add_term(a, k - a, Rational(a % 2 ? -1 : 1));
  return p;
}

// Reference values of P_0..P_3 for the table check.
std::vector<PolyZW> listed_polynomials() {
  return {PolyZW(Rational(1)), parse_poly_zw("w - z"), parse_poly_zw("w^2 - z*w + z^2 + 1/2*w + 1/2*z"),
          parse_poly_zw("w^3 - z*w^2 + z^2*w - z^3 + w^2 - z^2 - 1/6*w + 1/6*z")};
}

IntMatrix2 random_unimodular(Rng& rng) {
  IntMatrix2 m{{{1, 0}, {0, 1}}};
  const IntMatrix2 gens[] = {{{{0, -1}, {1, 0}}}, {{{1, 1}, {0, 1}}}, {{{1, -1}, {0, 1}}}, {{{1, 0}, {1, 1}}}};
  const int len = uniform(rng, 2, 4);
  for (int s = 0; s < len; ++s) {
    const IntMatrix2& g = gens[uniform(rng, 0, 3)];
    IntMatrix2 next{};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) next[i][j] = m[i][0] * g[0][j] + m[i][1] * g[1][j];
    }
    m = next;
  }
  return m;
}

std::string matrix_name(const IntMatrix2& m) {
  return "[[" + std::to_string(m[0][0]) + "," + std::to_string(m[0][1]) + "],[" + std::to_string(m[1][0]) + "," +
         std::to_string(m[1][1]) + "]]";
}

}  // namespace

CheckReport check_main_theorem() {
  CheckReport r{"main theorem"};
  const auto corpus = full_corpus();
  for (const auto& c : corpus) {
    const auto oracle = bracket_orders(c.diagram, 5);
    const auto formula = expansion_series(c.diagram, 5);
    for (int k = 0; k <= 5; ++k) {
      r.expect(oracle[k] == formula[k], c.name + " order " + std::to_string(k) + ": bracket " +
                                            oracle[k].to_string() + " vs formula " + formula[k].to_string());
    }
  }
  r.note(std::to_string(corpus.size()) + " diagrams, orders 0..5");
  return r;
}

CheckReport check_poly_table() {
  CheckReport r{"polynomial table"};
  DeformationPolyTable table;
  const auto derived = table.up_to(8);
  const auto listed = listed_polynomials();
  for (int k = 0; k <= 3; ++k) {
    r.expect(derived[k] == listed[k],
             "P_" + std::to_string(k) + " derived " + derived[k].to_string() + ", listed " + listed[k].to_string());
  }
  for (int k = 0; k <= 8; ++k) {
    const PolyZW& p = derived[k];
    r.expect(p.total_degree() == k && p.homogeneous_part(k) == alternating_top(k),
             "P_" + std::to_string(k) + " top part is not alternating");
    r.expect(p.swapped() == p * Rational(k % 2 ? -1 : 1), "P_" + std::to_string(k) + " parity symmetry");
  }
  r.note("derived P_3 = " + derived[3].to_string());
  return r;
}

CheckReport check_phi() {
  CheckReport r{"phi coefficients"};
  for (unsigned i = 0; i <= 20; ++i) {
    for (unsigned j = 0; j <= 8; ++j) {
      r.expect(phi_coeff(j, i) == phi_series_oracle(j, i),
               "phi_" + std::to_string(j) + "(" + std::to_string(i) + ") closed form vs series");
    }
    const TruncSeries s = loop_power_series(i, 17);
    for (unsigned n = 1; n <= 17; n += 2) {
      r.expect(is_zero(s.coeff(n)), "odd coefficient h^" + std::to_string(n) + " of loop power " + std::to_string(i));
    }
    const Rational p0 = Rational(int_pow(-2, i));
    r.expect(phi_coeff(0, i) == p0, "phi_0(" + std::to_string(i) + ") != (-2)^i");
    r.expect(phi_coeff(1, i) == -Rational(int_pow(-2, i + 1)) * Rational(static_cast<long>(i)),
             "phi_1(" + std::to_string(i) + ") != -(-2)^(i+1) i");
  }
  return r;
}

CheckReport check_low_orders() {
  CheckReport r{"order 0/1 oracles"};
  const auto corpus = full_corpus();
  for (const auto& c : corpus) {
    const auto orders = bracket_orders(c.diagram, 1);
    r.expect(orders[0] == t0_bracket(c.diagram), c.name + ": order 0 vs t=1 recursion");
    r.expect(orders[1] == bfk_first_order(c.diagram), c.name + ": order 1 vs crossing sum");
  }
  r.note(std::to_string(corpus.size()) + " diagrams");
  return r;
}

CheckReport check_skein_relation() {
  CheckReport r{"skein relation"};
  Rng rng(20240501);
  const auto diagrams = pool(1, 8);
  for (int n = 0; n < 50; ++n) {
    const int k = uniform(rng, 1, 4);
    const CorpusDiagram* c = nullptr;
    while (!c || static_cast<int>(c->diagram.crossings.size()) < k) c = &pick(rng, diagrams);
    const MarkedDiagram& d = c->diagram;
    std::vector<int> ids = d.crossings;
    std::shuffle(ids.begin(), ids.end(), rng);
    const int p = ids[0];
    const std::vector<int> marked(ids.begin(), ids.begin() + k);
    const PolyZW poly = random_homogeneous(rng, k);
    const std::string label = c->name + " P=" + poly.to_string() + " at " + std::to_string(p);
    const FormalDiagramSum lit = skein_relation_residual(poly, d.with_marked(marked), p);
    r.expect(lit.is_zero(), label + " with |C| = deg P: residual " + lit.summary());
    const FormalDiagramSum red = skein_relation_residual(poly, d, p, ResidualMode::ReduceUnmarked);
    r.expect(red.is_zero(), label + " with C = all, reduced: residual " + red.summary());
  }
  r.note("50 random cases; each checked with |C| = deg P and with C = all crossings after reduction");
  return r;
}

CheckReport check_chi_algebra() {
  CheckReport r{"chi algebra"};
  Rng rng(7310);
  const auto small = pool(1, 5);

  int divided_ok = 0;
  const int pairs = 12;
  for (int n = 0; n < pairs; ++n) {
    const CorpusDiagram& c = pick(rng, small);
    const PolyZW p = random_poly(rng, uniform(rng, 1, 3));
    const PolyZW q = random_poly(rng, uniform(rng, 1, 3));
    absorb_as(r, composition_check(p, q, c.diagram), c.name);
    divided_ok += divided_power_check(p, q, c.diagram).passed();
  }
  r.note("divided-power composition chi_P chi_Q = chi_{P*Q} holds in " + std::to_string(divided_ok) + "/" +
         std::to_string(pairs) + " of the same cases");

  for (int n = 0; n < 10; ++n) {
    const CorpusDiagram& c = pick(rng, small);
    const int k = uniform(rng, 1, static_cast<int>(std::min<std::size_t>(3, c.diagram.marked.size())));
    const PolyZW p = random_homogeneous(rng, k);
    absorb_as(r, divergence_check(p, c.diagram), c.name);
    absorb_as(r, grading_check(p, c.diagram), c.name);
  }

  const std::vector<std::pair<MarkedDiagram, MarkedDiagram>> stacks = {
      {from_braid(2, {1}), from_braid(3, {1, 2, -1, 2})},
      {from_braid(3, {1, 1}), from_braid(2, {-1, -1})},
      {kink_chain(1), kink_chain(2)},
      {torus_multicurve(1, 1, 1), TorusProduct{1, {1, 0}, 1, {0, 1}}.diagram()},
      {torus_multicurve(1, 0, 1), TorusProduct{1, {1, 0}, 1, {1, 2}}.diagram()},
  };
  for (const auto& [other, d] : stacks) {
    absorb_as(r, weak_product_check(random_poly(rng, 2), other, d), "");
  }

  for (const auto& surface : {SurfaceSpec::torus(), SurfaceSpec::annulus(), SurfaceSpec::disk(0), SurfaceSpec::disk(4)}) {
    r.absorb(vacuum_check(random_poly(rng, 2), surface));
  }
  for (int i = 0; i <= 4; ++i) {
    absorb_as(r, injectivity_witness_check(random_homogeneous(rng, i)), "i=" + std::to_string(i));
  }
  return r;
}

CheckReport check_invariance() {
  CheckReport r{"invariance"};
  Rng rng(99173);
  for (int n = 0; n < 30; ++n) {
    const int len = uniform(rng, 0, 5);
    std::vector<int> w;
    for (int s = 0; s < len; ++s) w.push_back(uniform(rng, 0, 1) ? uniform(rng, 1, 2) : -uniform(rng, 1, 2));
    const std::string name = BraidWord{3, w}.name();
    const LaurentVector base = bracket(from_braid(3, w));

    auto spliced = [&](std::size_t at, const std::vector<int>& piece) {
      std::vector<int> out(w.begin(), w.begin() + static_cast<long>(at));
      out.insert(out.end(), piece.begin(), piece.end());
      out.insert(out.end(), w.begin() + static_cast<long>(at), w.end());
      return out;
    };
    const std::size_t at = static_cast<std::size_t>(uniform(rng, 0, len));
    const int g = uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1);
    r.expect(bracket(from_braid(3, spliced(at, {g, -g}))) == base, name + ": cancelling pair inserted");

    // Both sides of a braid relation spliced into w must agree.
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> relations = {
        {{1, 2, 1}, {2, 1, 2}}, {{-1, -2, -1}, {-2, -1, -2}}, {{1, 2, -1}, {-2, 1, 2}}, {{-1, 2, 1}, {2, 1, -2}}};
    const auto& [lhs, rhs] = pick(rng, relations);
    r.expect(bracket(from_braid(3, spliced(at, lhs))) == bracket(from_braid(3, spliced(at, rhs))),
             name + ": braid relation spliced");
  }

  const std::vector<std::pair<Rational, Rational>> offsets = {
      {make_rational(1, 7), make_rational(2, 9)},
      {make_rational(3, 11), make_rational(5, 13)},
      {make_rational(4, 17), make_rational(1, 19)},
  };
  for (const auto& t : torus_products()) {
    const LaurentVector base = bracket(t.diagram());
    for (const auto& [o, u] : offsets) {
      r.expect(bracket(t.diagram(o, u)) == base, t.name() + ": offsets " + to_string(o) + ", " + to_string(u));
    }
  }
  return r;
}

CheckReport check_symmetries() {
  CheckReport r{"symmetries"};
  for (const auto& c : full_corpus()) absorb_as(r, mirror_symmetry_check(c.diagram, 4), c.name);
  for (const auto& t : torus_products(1, 3)) {
    const auto cls = torus_pair_classes(t);
    absorb_as(r, hermitian_check(cls[0], cls[1], 4), t.name());
  }
  Rng rng(51);
  const auto pairs = torus_products(1, 2);
  for (int n = 0; n < 5; ++n) {
    const IntMatrix2 m = random_unimodular(rng);
    const auto cls = torus_pair_classes(pick(rng, pairs));
    absorb_as(r, sl2z_equivariance_check(m, cls[0], cls[1], 4), matrix_name(m));
  }
  return r;
}

CheckReport check_star_algebra() {
  CheckReport r{"star algebra"};
  const std::vector<std::array<CurveClass, 3>> triples = {
      {CurveClass::torus(1, 0), CurveClass::torus(1, 0), CurveClass::torus(0, 1)},
      {CurveClass::torus(1, 0), CurveClass::torus(0, 1), CurveClass::torus(1, 1)},
      {CurveClass::torus(0, 1), CurveClass::torus(1, 0), CurveClass::torus(1, 1)},
      {CurveClass::torus(1, 0), CurveClass::torus(0, 1), CurveClass::torus(1, -1)},
      {CurveClass::torus(1, 1), CurveClass::torus(1, 0), CurveClass::torus(0, 1)},
  };
  for (const auto& [a, b, c] : triples) r.absorb(associativity_check(a, b, c, 3));
  for (const auto& t : torus_products(2, 3)) {
    const auto cls = torus_pair_classes(t);
    r.absorb(goldman_check(cls[0], cls[1]));
  }
  return r;
}

CheckReport check_differentiability() {
  CheckReport r{"differentiability"};
  for (const auto& t : torus_products()) {
    absorb_as(r, phi0_multiplicativity_check(torus_multicurve(t.n, t.a.a, t.a.b), torus_multicurve(t.m, t.b.a, t.b.b)),
              t.name());
  }
  MarkedDiagram loops = torus_multicurve(1, 1, 0);
  loops.free_loops.push_back({});
  loops.normalize();
  absorb_as(r, phi0_multiplicativity_check(loops, torus_multicurve(2, 0, 1)), "trivial loop + (1,0) / 2(0,1)");
  r.absorb(differentiability_witness());
  return r;
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = {
      {1, "main-theorem", "expansion formula equals bracket orders 0..5 on the corpus", check_main_theorem},
      {2, "poly", "P_0..P_3 as listed, alternating top part and parity for k <= 8", check_poly_table},
      {3, "phi", "phi_j closed form, vanishing odd orders, phi_0 and phi_1 specializations", check_phi},
      {4, "main-theorem", "order 0 and order 1 oracles on the corpus", check_low_orders},
      {5, "skein-relation", "skein relation residual vanishes on 50 random cases", check_skein_relation},
      {6, "axioms", "chi composition, divergence, weak product, vacuum, grading, injectivity", check_chi_algebra},
      {7, "invariance", "braid moves and torus offsets leave the bracket unchanged", check_invariance},
      {8, "invariance", "mirror symmetry, hermitian property, SL(2,Z) equivariance", check_symmetries},
      {9, "star", "associativity to order 3 and the Goldman form of lambda_1", check_star_algebra},
      {10, "differentiability", "phi_0 multiplicativity and the phi_1 non-differentiability witness",
       check_differentiability},
  };
  return all;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& c : acceptance_criteria()) {
    if (std::find(out.begin(), out.end(), c.suite) == out.end()) out.push_back(c.suite);
  }
  return out;
}

std::vector<Criterion> suite_criteria(const std::string& suite) {
  std::vector<Criterion> out;
  for (const auto& c : acceptance_criteria()) {
    if (c.suite == suite) out.push_back(c);
  }
  return out;
}

}  // namespace skein
