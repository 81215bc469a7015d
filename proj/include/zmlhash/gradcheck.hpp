#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace zmlhash {

struct LossEval {
  double value = 0.0;
  std::vector<double> grad;  // analytic gradient, same length as params
};

// Evaluates a scalar loss and its analytic gradient at the given parameters.
using LossWithGrad = std::function<LossEval(std::span<const double>)>;

struct GradCheckReport {
  double max_rel_error = 0.0;
  std::size_t worst_index = 0;
  double analytic_at_worst = 0.0;
  double numeric_at_worst = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

// Central-difference check of an analytic gradient. The step is scaled per
// coordinate; gradient coordinates below kGradCheckFloor in magnitude are
// compared absolutely against that floor instead of relatively.
inline constexpr double kGradCheckFloor = 1e-3;

GradCheckReport grad_check(const LossWithGrad& fn, std::span<const double> params,
                           double rel_tolerance = 1e-5, double step = 1e-5);

}  // namespace zmlhash
