#pragma once

#include <optional>
#include <vector>

#include "skein/exactalg/rational.hpp"

namespace skein {

/// Dense rational matrix stored row-major.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rational& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Exact solution of A x = b by Gauss-Jordan elimination. A may be overdetermined;
/// returns nullopt unless the system has full column rank and is consistent.
std::optional<std::vector<Rational>> solve_exact(RationalMatrix a, std::vector<Rational> b);

}  // namespace skein
