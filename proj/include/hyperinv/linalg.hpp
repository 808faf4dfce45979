#pragma once

#include "hyperinv/rat.hpp"

#include <cstddef>
#include <vector>

namespace hyperinv {

/// Dense square matrix over the rationals, row-major.
class RatMatrix {
public:
  explicit RatMatrix(std::size_t n) : n_(n), data_(n * n) {}

  [[nodiscard]] std::size_t size() const { return n_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

private:
  std::size_t n_;
  std::vector<Rat> data_;
};

/// Exact inverse by Gauss-Jordan elimination; throws on a singular matrix.
RatMatrix inverse(RatMatrix m);

}  // namespace hyperinv
