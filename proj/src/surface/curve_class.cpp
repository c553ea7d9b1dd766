#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

#include "skein/error.hpp"
#include "skein/surface/surface.hpp"

namespace skein {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void SurfaceSpec::validate() const {
  if (kind == SurfaceKind::Disk && (boundary_points < 0 || boundary_points % 2 != 0)) {
    throw Error(ErrorCode::MalformedDiagram,
                "disk boundary point count must be even and >= 0, got " + std::to_string(boundary_points));
  }
  if (kind != SurfaceKind::Disk && boundary_points != 0) {
    throw Error(ErrorCode::MalformedDiagram, "only disk surfaces carry boundary points");
  }
}

std::string SurfaceSpec::to_string() const {
  switch (kind) {
    case SurfaceKind::Disk: return "disk(" + std::to_string(boundary_points) + ")";
    case SurfaceKind::Annulus: return "annulus";
    case SurfaceKind::Torus: return "torus";
  }
  return "?";
}

HomologyClass canonical_loop_class(SurfaceKind kind, HomologyClass h) {
  switch (kind) {
    case SurfaceKind::Disk: return {};
    case SurfaceKind::Annulus: return {h.a < 0 ? -h.a : h.a, 0};
    case SurfaceKind::Torus:
      if (h.a < 0 || (h.a == 0 && h.b < 0)) return -h;
      return h;
  }
  return h;
}

CurveClass CurveClass::empty(SurfaceKind kind) {
  CurveClass c;
  c.kind_ = kind;
  return c;
}

CurveClass CurveClass::disk(std::vector<Chord> chords) {
  for (auto& [i, j] : chords) {
    if (i > j) std::swap(i, j);
  }
  std::sort(chords.begin(), chords.end());
  std::vector<int> seen;
  for (const auto& [i, j] : chords) {
    if (i < 1 || i == j) throw Error(ErrorCode::InvalidArgument, "bad chord in disk matching");
    seen.push_back(i);
    seen.push_back(j);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (seen[k] != static_cast<int>(k) + 1) {
      throw Error(ErrorCode::InvalidArgument, "disk matching must pair points 1..m exactly once");
    }
  }
  for (const auto& [i, j] : chords) {
    for (const auto& [k, l] : chords) {
      if (i < k && k < j && j < l) throw Error(ErrorCode::InvalidArgument, "disk matching is not planar");
    }
  }
  CurveClass c;
  c.kind_ = SurfaceKind::Disk;
  c.chords_ = std::move(chords);
  return c;
}

CurveClass CurveClass::annulus(std::int64_t copies) {
  if (copies < 0) throw Error(ErrorCode::InvalidArgument, "annulus copy count must be >= 0");
  CurveClass c;
  c.kind_ = SurfaceKind::Annulus;
  c.a_ = copies;
  return c;
}

CurveClass CurveClass::torus(std::int64_t a, std::int64_t b) {
  const HomologyClass h = canonical_loop_class(SurfaceKind::Torus, {a, b});
  CurveClass c;
  c.kind_ = SurfaceKind::Torus;
  c.a_ = h.a;
  c.b_ = h.b;
  return c;
}

CurveClass normalize_torus_class(std::int64_t a, std::int64_t b) { return CurveClass::torus(a, b); }

CurveClass parse_curve_class(SurfaceKind kind, const std::string& text) {
  if (text == "∅" || text == "empty") return CurveClass::empty(kind);
  std::smatch m;
  switch (kind) {
    case SurfaceKind::Annulus: {
      static const std::regex re(R"(core\^(\d+))");
      if (std::regex_match(text, m, re)) return CurveClass::annulus(std::stoll(m[1]));
      break;
    }
    case SurfaceKind::Torus: {
      static const std::regex re(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
      if (std::regex_match(text, m, re)) return CurveClass::torus(std::stoll(m[1]), std::stoll(m[2]));
      break;
    }
    case SurfaceKind::Disk: {
      static const std::regex outer(R"(match\[(.*)\])");
      if (!std::regex_match(text, m, outer)) break;
      const std::string body = m[1];
      static const std::regex chord(R"(\((\d+),(\d+)\))");
      std::vector<CurveClass::Chord> chords;
      for (auto it = std::sregex_iterator(body.begin(), body.end(), chord); it != std::sregex_iterator(); ++it) {
        chords.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]));
      }
      return CurveClass::disk(std::move(chords));
    }
  }
  throw Error(ErrorCode::ParseError, "not a curve class: '" + text + "'");
}

bool CurveClass::is_empty() const {
  switch (kind_) {
    case SurfaceKind::Disk: return chords_.empty();
    case SurfaceKind::Annulus: return a_ == 0;
    case SurfaceKind::Torus: return a_ == 0 && b_ == 0;
  }
  return true;
}

std::int64_t CurveClass::copies() const {
  switch (kind_) {
    case SurfaceKind::Disk: return 0;
    case SurfaceKind::Annulus: return a_;
    case SurfaceKind::Torus: return gcd64(a_, b_);
  }
  return 0;
}

std::string CurveClass::to_string() const {
  if (is_empty()) return "∅";
  std::ostringstream os;
  switch (kind_) {
    case SurfaceKind::Disk:
      os << "match[";
      for (std::size_t k = 0; k < chords_.size(); ++k) {
        os << (k ? "," : "") << "(" << chords_[k].first << "," << chords_[k].second << ")";
      }
      os << "]";
      break;
    case SurfaceKind::Annulus: os << "core^" << a_; break;
    case SurfaceKind::Torus: os << "(" << a_ << "," << b_ << ")"; break;
  }
  return os.str();
}

}  // namespace skein
