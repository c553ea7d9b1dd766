#include "skein/exactalg/series.hpp"

#include <algorithm>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

TruncSeries::TruncSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

TruncSeries::TruncSeries(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != order_ + 1) {
    throw Error(ErrorCode::InvalidArgument, "series coefficient count must be order + 1");
  }
}

TruncSeries TruncSeries::constant(unsigned order, const Rational& c) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return skein::is_zero(c); });
}

TruncSeries TruncSeries::sign_alternated() const {
  TruncSeries out = *this;
  for (unsigned i = 1; i <= order_; i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

TruncSeries TruncSeries::truncated(unsigned order) const {
  const unsigned k = std::min(order, order_);
  return TruncSeries(k, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + k + 1));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (unsigned i = 0; i <= order_; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (unsigned i = 0; i <= order_; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const unsigned k = std::min(a.order_, b.order_);
  TruncSeries out(k);
  for (unsigned i = 0; i <= k; ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (unsigned j = 0; i + j <= k; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i <= order_; ++i) {
    const Rational& c = coeffs_[i];
    if (skein::is_zero(c)) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (i == 0) {
      os << skein::to_string(mag);
    } else {
      if (mag != 1) os << skein::to_string(mag) << "*";
      os << "h";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  os << " + O(h^" << order_ + 1 << ")";
  return os.str();
}

TruncSeries laurent_to_series(const LaurentPoly& poly, unsigned order) {
  std::vector<Rational> coeffs(order + 1);
  std::vector<Rational> inv_fact(order + 1);
  for (unsigned j = 0; j <= order; ++j) inv_fact[j] = Rational(BigInt(1), factorial(j));
  for (const auto& [n, c] : poly.terms()) {
    // c * e^{n h} = c * sum_j n^j / j! h^j
    BigInt npow(1);
    for (unsigned j = 0; j <= order; ++j) {
      coeffs[j] += c * inv_fact[j] * Rational(npow);
      npow *= n;
    }
  }
  return TruncSeries(order, std::move(coeffs));
}

}  // namespace skein
