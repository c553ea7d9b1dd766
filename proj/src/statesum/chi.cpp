#include "skein/statesum/chi.hpp"

#include <sstream>

#include "skein/diagram/resolver.hpp"
#include "skein/error.hpp"

namespace skein {

void FormalDiagramSum::add(const Rational& c, const MarkedDiagram& d) {
  if (skein::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (skein::is_zero(it->second)) terms_.erase(it);
  }
}

FormalDiagramSum& FormalDiagramSum::operator+=(const FormalDiagramSum& o) {
  for (const auto& [d, c] : o.terms_) add(c, d);
  return *this;
}

FormalDiagramSum& FormalDiagramSum::operator-=(const FormalDiagramSum& o) {
  for (const auto& [d, c] : o.terms_) add(-c, d);
  return *this;
}

FormalDiagramSum& FormalDiagramSum::operator*=(const Rational& s) {
  if (skein::is_zero(s)) {
    terms_.clear();
  } else {
    for (auto& [d, c] : terms_) c *= s;
  }
  return *this;
}

std::string FormalDiagramSum::summary() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (const auto& [d, c] : terms_) {
    os << to_string(c) << " * [" << d.crossings.size() << " crossings, |C|=" << d.marked.size() << ", "
       << d.free_loops.size() << " free loops]\n";
  }
  return os.str();
}

std::vector<Rational> state_weights(const PolyZW& homogeneous, int k) {
  std::vector<Rational> w = pi_k(c_map(homogeneous), k).values();
  if (k % 2 == 1) {
    for (auto& x : w) x = -x;
  }
  return w;
}

KState k_state(const MarkedDiagram& d, std::uint64_t subset, std::uint64_t infinities) {
  KState s;
  for (std::size_t i = 0; i < d.marked.size(); ++i) {
    if ((subset >> i) & 1) s[d.marked[i]] = ((infinities >> i) & 1) ? Marker::Infinity : Marker::Zero;
  }
  return s;
}

FormalDiagramSum chi_apply(const PolyZW& p, const MarkedDiagram& d) {
  FormalDiagramSum out;
  const int n = static_cast<int>(d.marked.size());
  if (n > 62) throw Error(ErrorCode::InvalidArgument, "too many marked crossings");
  for (int k = 0; k <= std::min(p.total_degree(), n); ++k) {
    const PolyZW part = p.homogeneous_part(k);
    if (part.is_zero()) continue;
    const std::vector<Rational> w = state_weights(part, k);
    for_each_k_state(n, k, [&](std::uint64_t t, std::uint64_t s) {
      const Rational& c = w[static_cast<std::size_t>(__builtin_popcountll(s))];
      if (!is_zero(c)) out.add(c, smooth(d, k_state(d, t, s)));
    });
  }
  return out;
}

FormalDiagramSum chi_apply(const PolyZW& p, const FormalDiagramSum& s) {
  FormalDiagramSum out;
  for (const auto& [d, c] : s.terms()) out += chi_apply(p, d) * c;
  return out;
}

FormalDiagramSum chi_on_subset(const PolyZW& homogeneous, const MarkedDiagram& d, const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  const std::vector<Rational> w = state_weights(homogeneous.homogeneous_part(k), k);
  FormalDiagramSum out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
    KState state;
    for (int i = 0; i < k; ++i) state[subset[i]] = ((s >> i) & 1) ? Marker::Infinity : Marker::Zero;
    const Rational& c = w[static_cast<std::size_t>(__builtin_popcountll(s))];
    if (!is_zero(c)) out.add(c, smooth(d, state));
  }
  return out;
}

LoopCensus loop_census(const MarkedDiagram& d) {
  if (!d.is_real()) {
    throw Error(ErrorCode::NotRealDiagram, "phi_* needs every crossing in C (" + std::to_string(d.marked.size()) +
                                               " of " + std::to_string(d.crossings.size()) + " marked)");
  }
  const StateResolver resolver(d);
  LoopCensus census;
  const std::int64_t sign = d.crossings.size() % 2 == 0 ? 1 : -1;
  for (std::uint64_t mask = 0; mask < resolver.state_count(); ++mask) {
    const Resolution r = resolver.resolve(mask);
    census[r.essential][r.trivial] += sign;
  }
  return census;
}

void add_census(LoopCensus& into, const LoopCensus& from) {
  for (const auto& [cls, counts] : from) {
    auto& slot = into[cls];
    for (const auto& [mu, n] : counts) slot[mu] += n;
  }
}

RationalVector contract_census(const LoopCensus& census, const LoopWeightFn& phi) {
  RationalVector out;
  for (const auto& [cls, counts] : census) {
    Rational sum;
    for (const auto& [mu, n] : counts) sum += phi(static_cast<unsigned>(mu)) * n;
    out.add(cls, sum);
  }
  return out;
}

RationalVector phi_star(const LoopWeightFn& phi, const MarkedDiagram& d) {
  return contract_census(loop_census(d), phi);
}

RationalVector phi_star(const LoopWeightFn& phi, const FormalDiagramSum& s) {
  RationalVector out;
  for (const auto& [d, c] : s.terms()) out += phi_star(phi, d) * c;
  return out;
}

std::vector<RationalVector> phi_star_multi(unsigned max_j, const MarkedDiagram& d) {
  const LoopCensus census = loop_census(d);
  std::vector<RationalVector> out;
  for (unsigned j = 0; j <= max_j; ++j) out.push_back(contract_census(census, phi_table(j)));
  return out;
}

}  // namespace skein
