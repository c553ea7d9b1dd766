#include <cstdlib>

#include "skein/error.hpp"
#include "skein/surface/surface.hpp"

namespace skein {

namespace {

std::string describe(const HomologyClass& h) { return "(" + std::to_string(h.a) + "," + std::to_string(h.b) + ")"; }

}  // namespace

ComponentSummary classify_components(const SurfaceSpec& surface, const std::vector<HomologyClass>& classes) {
  ComponentSummary out;
  out.essential = CurveClass::empty(surface.kind);
  switch (surface.kind) {
    case SurfaceKind::Disk:
      for (const auto& h : classes) {
        if (!h.is_zero()) throw Error(ErrorCode::MalformedDiagram, "disk components carry no homology");
      }
      out.trivial = static_cast<int>(classes.size());
      return out;

    case SurfaceKind::Annulus: {
      std::int64_t copies = 0;
      for (const auto& h : classes) {
        if (h.a == 0) {
          ++out.trivial;
        } else if (std::llabs(h.a) == 1) {
          ++copies;
        } else {
          throw Error(ErrorCode::NonParallelComponents,
                      "annulus component with winding " + std::to_string(h.a) + " cannot be embedded");
        }
      }
      out.essential = CurveClass::annulus(copies);
      return out;
    }

    case SurfaceKind::Torus: {
      HomologyClass primitive;
      std::int64_t copies = 0;
      for (const auto& h : classes) {
        if (h.is_zero()) {
          ++out.trivial;
          continue;
        }
        if (gcd64(h.a, h.b) != 1) {
          throw Error(ErrorCode::NonParallelComponents, "component class " + describe(h) + " is not primitive");
        }
        const HomologyClass c = canonical_loop_class(SurfaceKind::Torus, h);
        if (copies == 0) {
          primitive = c;
        } else if (c != primitive) {
          throw Error(ErrorCode::NonParallelComponents,
                      "components " + describe(primitive) + " and " + describe(c) + " are not parallel");
        }
        ++copies;
      }
      out.essential = CurveClass::torus(copies * primitive.a, copies * primitive.b);
      return out;
    }
  }
  return out;
}

}  // namespace skein
