#include "skein/exactalg/poly_zw.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

PolyZW::PolyZW(const Rational& constant) { add_term(0, 0, constant); }

PolyZW PolyZW::monomial(int z_deg, int w_deg, const Rational& c) {
  PolyZW p;
  p.add_term(z_deg, w_deg, c);
  return p;
}

Rational PolyZW::coeff(int z_deg, int w_deg) const {
  auto it = terms_.find({z_deg, w_deg});
  return it == terms_.end() ? Rational(0) : it->second;
}

int PolyZW::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

bool PolyZW::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& kv) { return kv.first.first + kv.first.second == d; });
}

PolyZW PolyZW::homogeneous_part(int degree) const {
  PolyZW out;
  for (const auto& [e, c] : terms_) {
    if (e.first + e.second == degree) out.terms_.emplace(e, c);
  }
  return out;
}

PolyZW PolyZW::swapped() const {
  PolyZW out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.second, e.first}, c);
  return out;
}

void PolyZW::add_term(int z_deg, int w_deg, const Rational& c) {
  if (z_deg < 0 || w_deg < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in PolyZW");
  if (skein::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{z_deg, w_deg}, c);
  if (!inserted) {
    it->second += c;
    if (skein::is_zero(it->second)) terms_.erase(it);
  }
}

PolyZW& PolyZW::operator+=(const PolyZW& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

PolyZW& PolyZW::operator-=(const PolyZW& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

PolyZW& PolyZW::operator*=(const Rational& s) {
  if (skein::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

PolyZW PolyZW::operator-() const {
  PolyZW out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

PolyZW operator*(const PolyZW& a, const PolyZW& b) {
  PolyZW out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  }
  return out;
}

std::string PolyZW::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
  // total degree descending, then w-degree descending (w^2, z*w, z^2)
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    const int dx = x.first.first + x.first.second;
    const int dy = y.first.first + y.first.second;
    if (dx != dy) return dx > dy;
    return x.first.second > y.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (mag != 1 || (e.first == 0 && e.second == 0)) factors.push_back(skein::to_string(mag));
    if (e.first > 0) factors.push_back(e.first == 1 ? "z" : "z^" + std::to_string(e.first));
    if (e.second > 0) factors.push_back(e.second == 1 ? "w" : "w^" + std::to_string(e.second));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

bool StateWeightFn::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& c) { return skein::is_zero(c); });
}

PolyZW c_map(const PolyZW& p) {
  PolyZW out;
  for (const auto& [e, c] : p.terms()) out.add_term(e.first, e.first + e.second, c);
  return out;
}

StateWeightFn pi_k(const PolyZW& p, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "pi_k needs k >= 0");
  std::vector<Rational> table(static_cast<std::size_t>(k) + 1);
  for (const auto& [e, c] : p.terms()) {
    if (e.second != k) continue;
    if (e.first > k) {
      throw Error(ErrorCode::InvalidArgument, "w^k coefficient has z-degree above k; input is not in the image of c_map");
    }
    table[static_cast<std::size_t>(e.first)] = c;
  }
  return StateWeightFn(std::move(table));
}

Rational binomial_evaluate(const PolyZW& p, std::int64_t zeta, std::int64_t iota) {
  Rational out;
  for (const auto& [e, c] : p.terms()) {
    out += c * Rational(binomial(iota, e.first) * binomial(zeta, e.second));
  }
  return out;
}

PolyZW divided_power_product(const PolyZW& a, const PolyZW& b) {
  PolyZW out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      const BigInt mult = binomial(ea.first + eb.first, ea.first) * binomial(ea.second + eb.second, ea.second);
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb * Rational(mult));
    }
  }
  return out;
}

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "polynomial '" + s + "': " + why + " at offset " + std::to_string(pos));
  }
  int read_exponent() {
    skip();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected exponent");
      return std::stoi(s.substr(start, pos - start));
    }
    return 1;
  }
  // factor := number | z[^n] | w[^n]
  void read_factor(Rational& coeff, int& zd, int& wd) {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    const char ch = s[pos];
    if (ch == 'z' || ch == 'w') {
      ++pos;
      const int e = read_exponent();
      (ch == 'z' ? zd : wd) += e;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
      coeff *= parse_rational(s.substr(start, pos - start));
      return;
    }
    if (ch == '(') {
      // parenthesised constant like (1/2)
      ++pos;
      std::size_t start = pos;
      while (pos < s.size() && s[pos] != ')') ++pos;
      if (pos >= s.size()) fail("unbalanced parenthesis");
      coeff *= parse_rational(s.substr(start, pos - start));
      ++pos;
      return;
    }
    fail(std::string("unexpected character '") + ch + "'");
  }
  PolyZW parse() {
    PolyZW out;
    skip();
    if (pos < s.size() && s.substr(pos) == "0") return out;
    int sign = 1;
    bool first = true;
    while (true) {
      skip();
      if (pos >= s.size()) break;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = (s[pos] == '-') ? -1 : 1;
        ++pos;
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      Rational coeff(sign);
      int zd = 0;
      int wd = 0;
      read_factor(coeff, zd, wd);
      skip();
      while (pos < s.size() && s[pos] == '*') {
        ++pos;
        read_factor(coeff, zd, wd);
        skip();
      }
      out.add_term(zd, wd, coeff);
      sign = 1;
    }
    if (first) fail("empty polynomial");
    return out;
  }
};

}  // namespace

PolyZW parse_poly_zw(const std::string& text) { return PolyParser{text}.parse(); }

}  // namespace skein
