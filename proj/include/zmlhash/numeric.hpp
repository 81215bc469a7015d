#pragma once

#include <cmath>

namespace zmlhash {

// log(1 + exp(x)) without overflow for large |x|.
inline double softplus(double x) {
  return std::fmax(x, 0.0) + std::log1p(std::exp(-std::fabs(x)));
}

inline double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// log(sigmoid(x)); stays finite for any finite x.
inline double log_sigmoid(double x) { return -softplus(-x); }

}  // namespace zmlhash
