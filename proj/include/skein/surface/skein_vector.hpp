#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "skein/exactalg/laurent.hpp"
#include "skein/exactalg/rational.hpp"
#include "skein/exactalg/series.hpp"
#include "skein/surface/surface.hpp"

namespace skein {

/// Finite linear combination of curve classes with coefficients in R.
/// Zero coefficients are dropped eagerly, so equality is structural.
template <typename R>
class SkeinVector {
 public:
  using Terms = std::map<CurveClass, R>;

  SkeinVector() = default;
  SkeinVector(const CurveClass& c, R coeff) { add(c, std::move(coeff)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of c, or `zero` when absent.
  R coeff(const CurveClass& c, const R& zero = R()) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? zero : it->second;
  }

  void add(const CurveClass& c, R coeff) {
    if (skein::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(c, coeff);
    if (!inserted) {
      it->second += coeff;
      if (skein::is_zero(it->second)) terms_.erase(it);
    }
  }

  SkeinVector& operator+=(const SkeinVector& o) {
    for (const auto& [c, r] : o.terms_) add(c, r);
    return *this;
  }
  SkeinVector& operator-=(const SkeinVector& o) {
    for (const auto& [c, r] : o.terms_) add(c, -r);
    return *this;
  }
  template <typename S>
  SkeinVector& operator*=(const S& s) {
    Terms next;
    for (auto& [c, r] : terms_) {
      R v = r * s;
      if (!skein::is_zero(v)) next.emplace(c, std::move(v));
    }
    terms_ = std::move(next);
    return *this;
  }

  friend SkeinVector operator+(SkeinVector a, const SkeinVector& b) { return a += b; }
  friend SkeinVector operator-(SkeinVector a, const SkeinVector& b) { return a -= b; }
  friend SkeinVector operator-(const SkeinVector& a) { return SkeinVector() - a; }
  template <typename S>
  friend SkeinVector operator*(SkeinVector a, const S& s) {
    return a *= s;
  }
  friend bool operator==(const SkeinVector& a, const SkeinVector& b) { return a.terms_ == b.terms_; }

  /// Applies f to every coefficient (dropping zeros); changes the coefficient ring.
  template <typename F>
  auto map(F&& f) const -> SkeinVector<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    SkeinVector<std::decay_t<decltype(f(std::declval<const R&>()))>> out;
    for (const auto& [c, r] : terms_) out.add(c, f(r));
    return out;
  }

  /// Applies g to every basis class (linearly extended).
  template <typename G>
  SkeinVector map_classes(G&& g) const {
    SkeinVector out;
    for (const auto& [c, r] : terms_) out.add(g(c), r);
    return out;
  }

  /// "(coeff)*class + (coeff)*class", sorted by class; "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, r] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << skein::to_string(r) << ")*" << c.to_string();
    }
    return os.str();
  }

 private:
  Terms terms_;
};

using RationalVector = SkeinVector<Rational>;
using LaurentVector = SkeinVector<LaurentPoly>;
using SeriesVector = SkeinVector<TruncSeries>;

}  // namespace skein
