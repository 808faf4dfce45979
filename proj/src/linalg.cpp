#include "hyperinv/linalg.hpp"

#include "hyperinv/errors.hpp"

#include <utility>

namespace hyperinv {

RatMatrix inverse(RatMatrix m) {
  const std::size_t n = m.size();
  RatMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = Rat(1);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw ValidationError("singular matrix");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(pivot, c), m(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rat scale = Rat(1) / m(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const Rat factor = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= factor * m(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace hyperinv
