#include "skein/statesum/poly_table.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "skein/error.hpp"
#include "skein/exactalg/linear_solve.hpp"
#include "skein/exactalg/phi.hpp"
#include "skein/exactalg/series.hpp"

namespace skein {

namespace {

// [h^k] of (-t)^(zeta - iota) (-t^2 - t^-2)^mu.
Rational state_coefficient(int k, int zeta, int iota, int mu) {
  const int e = zeta - iota;
  LaurentPoly w = LaurentPoly::monomial(e, Rational(e % 2 == 0 ? 1 : -1)) * loop_value().pow(mu);
  return laurent_to_series(w, static_cast<unsigned>(k)).coeff(static_cast<unsigned>(k));
}

// Right-hand side part already known from lower polynomials.
Rational known_part(int k, int zeta, int iota, int mu, const std::vector<PolyZW>& lower) {
  Rational out;
  const int c = zeta + iota;
  for (int j = 1; 2 * j <= k; ++j) {
    out += phi_coeff(j, mu) * binomial_evaluate(lower.at(k - 2 * j), zeta, iota) * sign_pow(c);
  }
  return out;
}

}  // namespace

PolyZW derive_P(int k, const std::vector<PolyZW>& lower) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 0");
  if (static_cast<int>(lower.size()) < k) throw Error(ErrorCode::InvalidArgument, "derive_P needs P_0..P_{k-1}");

  std::vector<std::pair<int, int>> monomials;  // (z-degree, w-degree)
  for (int deg = 0; deg <= k; ++deg) {
    for (int a = 0; a <= deg; ++a) monomials.emplace_back(a, deg - a);
  }

  struct Sample {
    int zeta, iota, mu;
  };
  std::vector<Sample> rows;
  const int box = 2 * k + 1;
  for (int mu = 0; mu <= std::min(k, 2); ++mu) {
    for (int zeta = 0; zeta <= box; ++zeta) {
      for (int iota = 0; iota <= box; ++iota) {
        if (zeta + iota >= k) rows.push_back({zeta, iota, mu});
      }
    }
  }

  // Per state: (-1)^c phi_0(mu) E(P_k)(zeta, iota) = coefficient - known part.
  auto row_entry = [&](const Sample& s, const std::pair<int, int>& m) -> Rational {
    return Rational(phi_coeff(0, s.mu) * sign_pow(s.zeta + s.iota) *
                    Rational(binomial(s.iota, m.first) * binomial(s.zeta, m.second)));
  };
  auto rhs = [&](const Sample& s) -> Rational {
    return state_coefficient(k, s.zeta, s.iota, s.mu) - known_part(k, s.zeta, s.iota, s.mu, lower);
  };

  RationalMatrix a(rows.size(), monomials.size());
  std::vector<Rational> b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < monomials.size(); ++c) a(r, c) = row_entry(rows[r], monomials[c]);
    b[r] = rhs(rows[r]);
  }
  const auto solution = solve_exact(std::move(a), std::move(b));
  if (!solution) {
    throw Error(ErrorCode::SingularSystem, "no unique degree-" + std::to_string(k) + " fit for P_" + std::to_string(k));
  }
  PolyZW p;
  for (std::size_t c = 0; c < monomials.size(); ++c) p.add_term(monomials[c].first, monomials[c].second, (*solution)[c]);

  // Held-out points: larger counts and a loop number outside the fitted range.
  for (int zeta = box + 1; zeta <= box + 3; ++zeta) {
    for (int iota = 0; iota <= box + 3; iota += 2) {
      const Sample s{zeta, iota, 3};
      Rational lhs;
      for (std::size_t c = 0; c < monomials.size(); ++c) lhs += row_entry(s, monomials[c]) * p.coeff(monomials[c].first, monomials[c].second);
      if (lhs != rhs(s)) {
        throw Error(ErrorCode::TheoremViolation, "P_" + std::to_string(k) + " fit fails at held-out point");
      }
    }
  }
  return p;
}

DeformationPolyTable::DeformationPolyTable(std::filesystem::path path) : path_(std::move(path)) {
  if (!path_.empty()) load();
}

std::filesystem::path DeformationPolyTable::default_path() {
  if (const char* env = std::getenv("SKEIN_POLY_TABLE"); env && *env) return env;
  return std::filesystem::current_path() / "skein_poly_table.json";
}

void DeformationPolyTable::load() {
  std::ifstream in(path_);
  if (!in) return;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto j = nlohmann::json::parse(buf.str());
    for (const auto& [key, entries] : j.items()) {
      PolyZW p;
      for (const auto& e : entries) {
        p.add_term(e.at(0).get<int>(), e.at(1).get<int>(),
                   parse_rational(e.at(2).get<std::string>() + "/" + e.at(3).get<std::string>()));
      }
      table_[std::stoi(key)] = p;
    }
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, "polynomial table " + path_.string() + ": " + e.what());
  }
}

void DeformationPolyTable::save() const {
  if (path_.empty()) return;
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, p] : table_) {
    auto& list = j[std::to_string(k)] = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
      list.push_back({e.first, e.second, c.get_num().get_str(), c.get_den().get_str()});
    }
  }
  // Write beside the target, then rename over it.
  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path_);
}

PolyZW DeformationPolyTable::get(int k) { return up_to(k).at(k); }

std::vector<PolyZW> DeformationPolyTable::up_to(int k) {
  std::lock_guard lock(mutex_);
  std::vector<PolyZW> out;
  bool grew = false;
  for (int i = 0; i <= k; ++i) {
    auto it = table_.find(i);
    if (it == table_.end()) {
      it = table_.emplace(i, derive_P(i, out)).first;
      grew = true;
    }
    out.push_back(it->second);
  }
  if (grew) save();
  return out;
}

std::map<int, PolyZW> DeformationPolyTable::entries() const {
  std::lock_guard lock(mutex_);
  return table_;
}

DeformationPolyTable& shared_poly_table() {
  static DeformationPolyTable table;
  return table;
}

}  // namespace skein
