#include "zmlhash/gradcheck.hpp"

#include <cmath>
#include <string>

#include "zmlhash/error.hpp"

namespace zmlhash {

GradCheckReport grad_check(const LossWithGrad& fn, std::span<const double> params,
                           double rel_tolerance, double step) {
  const LossEval base = fn(params);
  if (!std::isfinite(base.value)) {
    throw NumericError("grad_check: loss is not finite at the given parameters");
  }
  if (base.grad.size() != params.size()) {
    throw ShapeError("grad_check: gradient length " + std::to_string(base.grad.size()) +
                     " does not match parameter length " + std::to_string(params.size()));
  }

  GradCheckReport report;
  report.tolerance = rel_tolerance;
  std::vector<double> probe(params.begin(), params.end());
  for (std::size_t i = 0; i < probe.size(); ++i) {
    const double h = step * std::fmax(1.0, std::fabs(probe[i]));
    const double saved = probe[i];
    probe[i] = saved + h;
    const double plus = fn(probe).value;
    probe[i] = saved - h;
    const double minus = fn(probe).value;
    probe[i] = saved;
    if (!std::isfinite(plus) || !std::isfinite(minus)) {
      throw NumericError("grad_check: loss is not finite near coordinate " + std::to_string(i));
    }
    const double numeric = (plus - minus) / (2.0 * h);
    const double rel =
        std::fabs(base.grad[i] - numeric) / std::fmax(std::fabs(numeric), kGradCheckFloor);
    if (rel > report.max_rel_error) {
      report.max_rel_error = rel;
      report.worst_index = i;
      report.analytic_at_worst = base.grad[i];
      report.numeric_at_worst = numeric;
    }
  }
  report.passed = report.max_rel_error < rel_tolerance;
  return report;
}

}  // namespace zmlhash
