#pragma once

#include <map>
#include <string>

#include "skein/exactalg/rational.hpp"

namespace skein {

/// Laurent polynomial in t over the rationals. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);

  /// c * t^exponent
  static LaurentPoly monomial(int exponent, const Rational& c = Rational(1));
  static LaurentPoly t() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int exponent) const;

  /// Image under t -> t^{-1}.
  LaurentPoly mirror() const;
  LaurentPoly pow(unsigned e) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& s);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Adds c * t^exponent in place.
  void add_term(int exponent, const Rational& c);

  /// e.g. "-t^2 - t^-2", "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline std::string to_string(const LaurentPoly& p) { return p.to_string(); }

/// The loop value -t^2 - t^{-2}.
LaurentPoly loop_value();

}  // namespace skein
