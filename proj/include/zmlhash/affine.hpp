#pragma once

#include <vector>

#include "zmlhash/matrix.hpp"

namespace zmlhash {

// Fully-connected map: out = x * weight + bias, applied row-wise to a batch.
struct AffineLayer {
  Matrix weight;             // in_dim x out_dim
  std::vector<double> bias;  // out_dim

  std::size_t in_dim() const noexcept { return weight.rows(); }
  std::size_t out_dim() const noexcept { return weight.cols(); }

  Matrix forward(const Matrix& x) const;
};

Matrix affine_forward(const AffineLayer& layer, const Matrix& x);

}  // namespace zmlhash
