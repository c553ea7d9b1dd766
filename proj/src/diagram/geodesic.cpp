#include "skein/diagram/geodesic.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>

#include "skein/error.hpp"

namespace skein {

namespace {

std::int64_t floor_q(const Rational& x) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return f.get_si();
}

Rational frac(const Rational& x) { return x - floor_q(x); }

using Point = std::array<Rational, 2>;

Point base_point(const GeodesicLine& l) {
  if (l.q != 0) return {frac(l.offset / l.q), Rational(0)};
  return {Rational(0), frac(-l.offset / l.p)};
}

Rational det(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

struct Hit {
  Point point;
  int over, under;
  Rational u_over, u_under;
};

// Crossing points of two non-parallel lines, with the parameter of each line there.
std::vector<std::tuple<Point, Rational, Rational>> intersect(const GeodesicLine& li, const GeodesicLine& lj) {
  const Point pi = base_point(li), pj = base_point(lj);
  const std::int64_t d = li.p * lj.q - li.q * lj.p;
  const std::int64_t bx = std::llabs(li.p) + std::llabs(lj.p) + 1;
  const std::int64_t by = std::llabs(li.q) + std::llabs(lj.q) + 1;
  std::vector<std::tuple<Point, Rational, Rational>> out;
  for (std::int64_t nx = -bx; nx <= bx; ++nx) {
    for (std::int64_t ny = -by; ny <= by; ++ny) {
      const Rational dx = pj[0] + nx - pi[0];
      const Rational dy = pj[1] + ny - pi[1];
      // u v_i - w v_j = delta
      Rational u = det(dx, dy, Rational(lj.p), Rational(lj.q)) / d;
      Rational w = -det(Rational(li.p), Rational(li.q), dx, dy) / d;
      if (u < 0 || u >= 1 || w < 0 || w >= 1) continue;
      Point x{frac(pi[0] + u * li.p), frac(pi[1] + u * li.q)};
      out.emplace_back(std::move(x), std::move(u), std::move(w));
    }
  }
  if (static_cast<std::int64_t>(out.size()) != std::llabs(d)) {
    throw Error(ErrorCode::UnsupportedSuperposition, "geodesic intersection count mismatch");
  }
  return out;
}

GeodesicLine canonical_line(std::int64_t p, std::int64_t q, const Rational& offset, int layer) {
  const HomologyClass c = canonical_loop_class(SurfaceKind::Torus, {p, q});
  // (-p,-q) describes the same set with the offset negated.
  const Rational o = (c.a == p && c.b == q) ? offset : Rational(-offset);
  return {c.a, c.b, frac(o), layer};
}

// Diagram of a generic arrangement. `marked_of` decides each crossing's marking.
template <typename MarkedOf>
MarkedDiagram build(std::vector<GeodesicLine> lines, const std::vector<HomologyClass>& trivial_loops,
                    MarkedOf&& marked_of) {
  std::vector<Hit> hits;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const GeodesicLine& a = lines[i];
      const GeodesicLine& b = lines[j];
      if (a.p == b.p && a.q == b.q) {
        if (a.offset == b.offset) throw Error(ErrorCode::UnsupportedSuperposition, "coincident geodesics");
        continue;
      }
      if (a.layer == b.layer) throw Error(ErrorCode::UnsupportedSuperposition, "crossing lines on one layer");
      const bool i_over = a.layer > b.layer;
      for (auto& [x, u, w] : intersect(a, b)) {
        if (i_over) {
          hits.push_back({x, static_cast<int>(i), static_cast<int>(j), u, w});
        } else {
          hits.push_back({x, static_cast<int>(j), static_cast<int>(i), w, u});
        }
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) { return x.point < y.point; });
  for (std::size_t k = 1; k < hits.size(); ++k) {
    if (hits[k - 1].point == hits[k].point) throw Error(ErrorCode::UnsupportedSuperposition, "triple point");
  }

  auto arrangement = std::make_shared<GeodesicArrangement>();
  MarkedDiagram d;
  d.surface = SurfaceSpec::torus();
  d.free_loops = trivial_loops;

  struct Visit {
    Rational u;
    int crossing;
    int out_port, in_port;
  };
  std::vector<std::vector<Visit>> along(lines.size());
  for (std::size_t c = 0; c < hits.size(); ++c) {
    const Hit& h = hits[c];
    const int id = static_cast<int>(c);
    d.crossings.push_back(id);
    arrangement->crossings.push_back({h.over, h.under, h.point});
    if (marked_of(h.over, h.under, h.point, id)) d.marked.push_back(id);
    const GeodesicLine& o = lines[h.over];
    const GeodesicLine& w = lines[h.under];
    const bool ccw = o.p * w.q - o.q * w.p > 0;
    along[h.over].push_back({h.u_over, id, 0, 2});
    along[h.under].push_back({h.u_under, id, ccw ? 1 : 3, ccw ? 3 : 1});
  }

  int next_edge = 0;
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const GeodesicLine& line = lines[l];
    auto& vs = along[l];
    if (vs.empty()) {
      d.free_loops.push_back({line.p, line.q});
      continue;
    }
    std::sort(vs.begin(), vs.end(), [](const Visit& x, const Visit& y) { return x.u < y.u; });
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const Visit& from = vs[k];
      const Visit& to = vs[(k + 1) % vs.size()];
      const Rational du = (k + 1 < vs.size()) ? Rational(to.u - from.u) : Rational(to.u + 1 - from.u);
      const Point& x = arrangement->crossings[from.crossing].point;
      const HomologyClass label{floor_q(x[0] + du * line.p), floor_q(x[1] + du * line.q)};
      d.edges.push_back({next_edge++, Endpoint::at(from.crossing, from.out_port),
                         Endpoint::at(to.crossing, to.in_port), label});
    }
  }
  d.marked.erase(std::unique(d.marked.begin(), d.marked.end()), d.marked.end());
  arrangement->lines = std::move(lines);
  d.normalize();
  d = canonical_ports(std::move(d));
  d.geodesic = std::move(arrangement);
  return d;
}

int top_layer(const std::vector<GeodesicLine>& lines) {
  int top = -1;
  for (const auto& l : lines) top = std::max(top, l.layer);
  return top;
}

}  // namespace

MarkedDiagram torus_multicurve(int n, std::int64_t p, std::int64_t q, const Rational& base_offset) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "copy count must be >= 0");
  if (n > 0 && gcd64(p, q) != 1) {
    throw Error(ErrorCode::NonPrimitiveClass,
                "class (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
  }
  std::vector<GeodesicLine> lines;
  for (int i = 0; i < n; ++i) lines.push_back(canonical_line(p, q, base_offset + make_rational(i, n), 0));
  return build(std::move(lines), {}, [](int, int, const Point&, int) { return true; });
}

GeodesicArrangement arrangement_of(const MarkedDiagram& d) {
  if (d.surface.kind != SurfaceKind::Torus) throw Error(ErrorCode::SurfaceMismatch, "not a torus diagram");
  if (d.geodesic) return *d.geodesic;
  if (!d.crossings.empty()) {
    throw Error(ErrorCode::UnsupportedSuperposition, "torus diagram with crossings but no geodesic realization");
  }
  GeodesicArrangement a;
  std::vector<HomologyClass> essential;
  for (const auto& h : d.free_loops) {
    if (!h.is_zero()) essential.push_back(h);
  }
  const int n = static_cast<int>(essential.size());
  for (int i = 0; i < n; ++i) {
    if (essential[i] != essential[0] || gcd64(essential[i].a, essential[i].b) != 1) {
      throw Error(ErrorCode::NonParallelComponents, "free loops are not parallel primitive curves");
    }
    a.lines.push_back(canonical_line(essential[i].a, essential[i].b, make_rational(1, 5) + make_rational(i, n), 0));
  }
  return a;
}

MarkedDiagram superpose_torus(const MarkedDiagram& over, const MarkedDiagram& under, ProductMode mode) {
  const GeodesicArrangement a = arrangement_of(over);
  const GeodesicArrangement b = arrangement_of(under);

  std::vector<HomologyClass> trivial;
  for (const auto* d : {&over, &under}) {
    for (const auto& h : d->free_loops) {
      if (h.is_zero()) trivial.push_back(h);
    }
  }

  // Old crossings keyed by (over line, under line, point) in their own arrangement.
  std::map<std::tuple<int, int, Point>, bool> old_b, old_a;
  for (std::size_t c = 0; c < b.crossings.size(); ++c) {
    const auto& x = b.crossings[c];
    old_b[{x.over_line, x.under_line, x.point}] = under.is_marked(static_cast<int>(c));
  }
  for (std::size_t c = 0; c < a.crossings.size(); ++c) {
    const auto& x = a.crossings[c];
    old_a[{x.over_line, x.under_line, x.point}] = over.is_marked(static_cast<int>(c));
  }

  const int nb = static_cast<int>(b.lines.size());
  const int lift = top_layer(b.lines) + 1;

  // Translate the upper diagram until the arrangement is generic.
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Point shift{make_rational(attempt, 101), make_rational(3 * attempt, 103)};
    std::vector<GeodesicLine> lines = b.lines;
    for (const auto& l : a.lines) {
      lines.push_back({l.p, l.q, frac(l.offset + l.q * shift[0] - l.p * shift[1]), l.layer + lift});
    }
    auto marked_of = [&](int o, int u, const Point& x, int) {
      if (o < nb && u < nb) return old_b.at({o, u, x});
      if (o >= nb && u >= nb) {
        const Point back{frac(x[0] - shift[0]), frac(x[1] - shift[1])};
        return old_a.at({o - nb, u - nb, back});
      }
      return mode == ProductMode::Strong;
    };
    try {
      return build(std::move(lines), trivial, marked_of);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedSuperposition) throw;
    }
  }
  throw Error(ErrorCode::UnsupportedSuperposition, "no generic translate found");
}

}  // namespace skein
