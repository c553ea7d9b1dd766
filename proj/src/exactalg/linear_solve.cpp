#include "skein/exactalg/linear_solve.hpp"

#include <utility>

namespace skein {

std::optional<std::vector<Rational>> solve_exact(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows && is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows) return std::nullopt;  // rank deficient
    if (pivot != row) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(row, c));
      std::swap(b[pivot], b[row]);
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < n; ++c) a(row, c) *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(row, c);
      b[r] -= f * b[row];
    }
    ++row;
  }
  for (std::size_t r = n; r < a.rows; ++r) {
    if (!is_zero(b[r])) return std::nullopt;  // inconsistent
  }
  b.resize(n);
  return b;
}

}  // namespace skein
