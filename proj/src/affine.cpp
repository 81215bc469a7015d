#include "zmlhash/affine.hpp"

#include <string>

#include "zmlhash/error.hpp"

namespace zmlhash {

Matrix AffineLayer::forward(const Matrix& x) const {
  if (x.cols() != in_dim()) {
    throw ShapeError("affine_forward: input has " + std::to_string(x.cols()) +
                     " columns, layer expects " + std::to_string(in_dim()));
  }
  if (bias.size() != out_dim()) {
    throw ShapeError("affine_forward: bias length " + std::to_string(bias.size()) +
                     " does not match out_dim " + std::to_string(out_dim()));
  }
  Matrix out = matmul(x, weight);
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      out(i, j) += bias[j];
    }
  }
  return out;
}

Matrix affine_forward(const AffineLayer& layer, const Matrix& x) { return layer.forward(x); }

}  // namespace zmlhash
