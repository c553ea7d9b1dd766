#pragma once

#include <map>
#include <string>
#include <vector>

#include "skein/diagram/diagram.hpp"
#include "skein/exactalg/phi.hpp"
#include "skein/exactalg/poly_zw.hpp"
#include "skein/surface/skein_vector.hpp"

namespace skein {

/// Finite combination of marked diagrams, compared structurally.
class FormalDiagramSum {
 public:
  using Terms = std::map<MarkedDiagram, Rational>;

  FormalDiagramSum() = default;
  FormalDiagramSum(const Rational& c, const MarkedDiagram& d) { add(c, d); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Rational& c, const MarkedDiagram& d);
  FormalDiagramSum& operator+=(const FormalDiagramSum& o);
  FormalDiagramSum& operator-=(const FormalDiagramSum& o);
  FormalDiagramSum& operator*=(const Rational& s);
  friend FormalDiagramSum operator+(FormalDiagramSum a, const FormalDiagramSum& b) { return a += b; }
  friend FormalDiagramSum operator-(FormalDiagramSum a, const FormalDiagramSum& b) { return a -= b; }
  friend FormalDiagramSum operator*(FormalDiagramSum a, const Rational& s) { return a *= s; }
  friend bool operator==(const FormalDiagramSum& a, const FormalDiagramSum& b) { return a.terms_ == b.terms_; }

  /// One line per term: coefficient, crossing count, marked count, free loops.
  std::string summary() const;

 private:
  Terms terms_;
};

/// Sign and weight of a k-state: (-1)^k p(iota) with p = pi_k(c_map(P_k)) for the
/// homogeneous degree-k part P_k.
std::vector<Rational> state_weights(const PolyZW& homogeneous, int k);

/// chi_P[D,C] = sum over homogeneous parts of (-1)^k sum over k-subsets T of C and
/// states on T of p(iota) [D(sigma), C \ T].
FormalDiagramSum chi_apply(const PolyZW& p, const MarkedDiagram& d);
FormalDiagramSum chi_apply(const PolyZW& p, const FormalDiagramSum& s);

/// Terms of chi restricted to one subset T of the marked crossings.
FormalDiagramSum chi_on_subset(const PolyZW& homogeneous, const MarkedDiagram& d, const std::vector<int>& subset);

/// phi_*[D,C] = (-1)^|C| sum over states of phi(mu) D(sigma). Requires real diagrams.
RationalVector phi_star(const LoopWeightFn& phi, const MarkedDiagram& d);
RationalVector phi_star(const LoopWeightFn& phi, const FormalDiagramSum& s);

/// Signed loop census of a real diagram: class -> (mu -> (-1)^|C| * number of states).
/// phi_* is the contraction of this census with phi.
using LoopCensus = std::map<CurveClass, std::map<int, std::int64_t>>;
LoopCensus loop_census(const MarkedDiagram& d);
void add_census(LoopCensus& into, const LoopCensus& from);
RationalVector contract_census(const LoopCensus& census, const LoopWeightFn& phi);

/// (phi_j)_* for j = 0..max_j from one state enumeration.
std::vector<RationalVector> phi_star_multi(unsigned max_j, const MarkedDiagram& d);

/// Calls f(subset_bits, state_bits) for every k-subset of n positions and every
/// state on it (bit set = infinity), in increasing numeric order.
template <typename F>
void for_each_k_state(int n, int k, F&& f) {
  if (k > n || k < 0) return;
  if (k == 0) {
    f(std::uint64_t{0}, std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t t = (std::uint64_t{1} << k) - 1; t < limit;) {
    for (std::uint64_t s = t;; s = (s - 1) & t) {
      f(t, s);
      if (s == 0) break;
    }
    const std::uint64_t c = t & (~t + 1);
    const std::uint64_t r = t + c;
    t = (((r ^ t) >> 2) / c) | r;
  }
}

/// The k-state on the marked crossings of d selected by bit masks over d.marked.
KState k_state(const MarkedDiagram& d, std::uint64_t subset, std::uint64_t infinities);

}  // namespace skein
