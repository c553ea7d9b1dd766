#include "skein/verify/corpus.hpp"

#include <cstdlib>

#include "skein/diagram/geodesic.hpp"

namespace skein {

namespace {

// Small primitive classes; pairs among them cover |det| = 0..3.
const std::vector<HomologyClass> kTorusClasses = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, 3}};

std::string class_name(const HomologyClass& h) {
  return "(" + std::to_string(h.a) + "," + std::to_string(h.b) + ")";
}

}  // namespace

std::string BraidWord::name() const {
  std::string s = "braid" + std::to_string(strands) + "[";
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + std::to_string(word[i]);
  return s + "]";
}

std::string TorusProduct::name() const {
  return std::to_string(n) + class_name(a) + "/" + std::to_string(m) + class_name(b);
}

MarkedDiagram TorusProduct::diagram() const {
  return superpose(torus_multicurve(n, a.a, a.b), torus_multicurve(m, b.a, b.b), ProductMode::Strong);
}

MarkedDiagram TorusProduct::diagram(const Rational& over_offset, const Rational& under_offset) const {
  return superpose(torus_multicurve(n, a.a, a.b, over_offset), torus_multicurve(m, b.a, b.b, under_offset),
                   ProductMode::Strong);
}

std::vector<BraidWord> braid_words(int max_strands, int max_length) {
  std::vector<BraidWord> out{{1, {}}};
  for (int s = 2; s <= max_strands; ++s) {
    std::vector<int> gens;
    for (int g = 1; g < s; ++g) {
      gens.push_back(g);
      gens.push_back(-g);
    }
    std::vector<std::vector<int>> level{{}};
    out.push_back({s, {}});
    for (int len = 1; len <= max_length; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : level) {
        for (int g : gens) {
          next.push_back(w);
          next.back().push_back(g);
          out.push_back({s, next.back()});
        }
      }
      level = std::move(next);
    }
  }
  return out;
}

std::vector<TorusProduct> torus_products(int max_copies, int max_det) {
  std::vector<TorusProduct> out;
  for (const auto& a : kTorusClasses) {
    for (const auto& b : kTorusClasses) {
      if (std::llabs(a.a * b.b - a.b * b.a) > max_det) continue;
      for (int n = 1; n <= max_copies; ++n) {
        for (int m = 1; m <= max_copies; ++m) out.push_back({n, a, m, b});
      }
    }
  }
  return out;
}

std::vector<CorpusDiagram> braid_corpus(int max_strands, int max_length) {
  std::vector<CorpusDiagram> out;
  for (const auto& w : braid_words(max_strands, max_length)) out.push_back({w.name(), from_braid(w.strands, w.word)});
  return out;
}

std::vector<CorpusDiagram> torus_corpus(int max_copies, int max_det) {
  std::vector<CorpusDiagram> out;
  for (const auto& t : torus_products(max_copies, max_det)) out.push_back({t.name(), t.diagram()});
  return out;
}

std::vector<CorpusDiagram> kink_corpus(int max_i) {
  std::vector<CorpusDiagram> out;
  for (int i = 0; i <= max_i; ++i) out.push_back({"kink" + std::to_string(i), kink_chain(i)});
  return out;
}

std::vector<CorpusDiagram> full_corpus() {
  std::vector<CorpusDiagram> out = braid_corpus();
  for (auto& c : torus_corpus()) out.push_back(std::move(c));
  for (auto& c : kink_corpus()) out.push_back(std::move(c));
  return out;
}

}  // namespace skein
