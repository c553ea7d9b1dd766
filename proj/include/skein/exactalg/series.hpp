#pragma once

#include <string>
#include <vector>

#include "skein/exactalg/laurent.hpp"
#include "skein/exactalg/rational.hpp"

namespace skein {

/// Power series in h truncated at a stated order (inclusive).
///
/// Binary operations between series of different orders produce a series of
/// the smaller order; nothing beyond a stored order is ever claimed.
class TruncSeries {
 public:
  explicit TruncSeries(unsigned order = 0);
  TruncSeries(unsigned order, std::vector<Rational> coeffs);

  static TruncSeries constant(unsigned order, const Rational& c);

  unsigned order() const { return order_; }
  const Rational& coeff(unsigned i) const { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// Coefficients of h^i multiplied by (-1)^i, i.e. the image under h -> -h.
  TruncSeries sign_alternated() const;
  TruncSeries truncated(unsigned order) const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& s);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
  friend TruncSeries operator*(const Rational& s, TruncSeries a) { return a *= s; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  unsigned order_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const TruncSeries& s) { return s.is_zero(); }
inline std::string to_string(const TruncSeries& s) { return s.to_string(); }

/// Substitutes t = e^h and truncates at h^order.
TruncSeries laurent_to_series(const LaurentPoly& poly, unsigned order);

}  // namespace skein
