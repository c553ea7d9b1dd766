#pragma once

#include <string>
#include <vector>

#include "skein/diagram/diagram.hpp"
#include "skein/exactalg/rational.hpp"

namespace skein {

struct CorpusDiagram {
  std::string name;
  MarkedDiagram diagram;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> word;
  std::string name() const;
};

/// n parallel copies of a over m parallel copies of b on the torus.
struct TorusProduct {
  int n = 1;
  HomologyClass a;
  int m = 1;
  HomologyClass b;
  std::string name() const;
  /// Strong superposition with the upper and lower offsets given (defaults otherwise).
  MarkedDiagram diagram() const;
  MarkedDiagram diagram(const Rational& over_offset, const Rational& under_offset) const;
};

/// Every word in the generators +-1..+-(s-1) of length <= max_length, for s <= max_strands.
std::vector<BraidWord> braid_words(int max_strands = 3, int max_length = 6);

/// Ordered pairs of classes from a fixed primitive set with |det| <= max_det and
/// copy counts 1..max_copies on each side.
std::vector<TorusProduct> torus_products(int max_copies = 2, int max_det = 3);

/// The corpus families; full_corpus concatenates them with default bounds.
std::vector<CorpusDiagram> braid_corpus(int max_strands = 3, int max_length = 6);
std::vector<CorpusDiagram> torus_corpus(int max_copies = 2, int max_det = 3);
std::vector<CorpusDiagram> kink_corpus(int max_i = 5);
std::vector<CorpusDiagram> full_corpus();

}  // namespace skein
