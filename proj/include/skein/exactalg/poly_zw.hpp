#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skein/exactalg/rational.hpp"

namespace skein {

/// Polynomial in two commuting variables z, w over the rationals.
///
/// Keys are (degree in z, degree in w). In the resolution calculus z counts
/// infinity-markers and w counts 0-markers.
class PolyZW {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, Rational>;

  PolyZW() = default;
  explicit PolyZW(const Rational& constant);

  static PolyZW monomial(int z_deg, int w_deg, const Rational& c = Rational(1));
  static PolyZW z() { return monomial(1, 0); }
  static PolyZW w() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int z_deg, int w_deg) const;
  Rational constant_term() const { return coeff(0, 0); }

  /// Maximal i + j over the support; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  PolyZW homogeneous_part(int degree) const;

  /// P(w, z): exchanges the roles of the variables.
  PolyZW swapped() const;

  void add_term(int z_deg, int w_deg, const Rational& c);

  PolyZW& operator+=(const PolyZW& o);
  PolyZW& operator-=(const PolyZW& o);
  PolyZW& operator*=(const Rational& s);
  PolyZW operator-() const;

  friend PolyZW operator+(PolyZW a, const PolyZW& b) { return a += b; }
  friend PolyZW operator-(PolyZW a, const PolyZW& b) { return a -= b; }
  friend PolyZW operator*(const PolyZW& a, const PolyZW& b);
  friend PolyZW operator*(PolyZW a, const Rational& s) { return a *= s; }
  friend PolyZW operator*(const Rational& s, PolyZW a) { return a *= s; }
  friend bool operator==(const PolyZW& a, const PolyZW& b) { return a.terms_ == b.terms_; }

  /// Human-readable form, highest total degree first: "w^2 - z*w + z^2 + 1/2*w + 1/2*z".
  std::string to_string() const;

 private:
  Terms terms_;
};

inline std::string to_string(const PolyZW& p) { return p.to_string(); }

/// Weight table p : {0..k} -> Q attached to a homogeneous degree-k part.
class StateWeightFn {
 public:
  explicit StateWeightFn(std::vector<Rational> values) : values_(std::move(values)) {}

  /// Largest index of the domain.
  int k() const { return static_cast<int>(values_.size()) - 1; }
  const Rational& operator()(int infinity_count) const { return values_.at(static_cast<std::size_t>(infinity_count)); }
  const std::vector<Rational>& values() const { return values_; }
  bool is_zero() const;

 private:
  std::vector<Rational> values_;
};

/// Algebra endomorphism z -> z w, w -> w.
PolyZW c_map(const PolyZW& p);

/// Coefficient of w^k (P read as a polynomial in w over Q[z]) as a table indexed by z-degree 0..k.
StateWeightFn pi_k(const PolyZW& p, int k);

/// Evaluates z^a w^b -> C(iota, a) C(zeta, b): the number-of-substates weight that a
/// resolution operator with polynomial P assigns to a Kauffman state with zeta 0-markers
/// and iota infinity-markers.
Rational binomial_evaluate(const PolyZW& p, std::int64_t zeta, std::int64_t iota);

/// Product under which composition of resolution operators closes:
/// z^a w^b * z^c w^d = C(a+c, a) C(b+d, b) z^{a+c} w^{b+d}.
PolyZW divided_power_product(const PolyZW& a, const PolyZW& b);

/// Parses text like "w^2 - z*w + 1/2*z" (terms separated by + or -, factors by *).
PolyZW parse_poly_zw(const std::string& text);

}  // namespace skein
