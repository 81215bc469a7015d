#include "zmlhash/adam.hpp"

#include <cmath>
#include <string>

#include "zmlhash/error.hpp"

namespace zmlhash {

AdamState::AdamState(std::size_t length, AdamConfig config)
    : config_(config), m_(length, 0.0), v_(length, 0.0) {}

void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state) {
  if (params.size() != state.m_.size() || grads.size() != state.m_.size()) {
    throw ShapeError("adam_step: params " + std::to_string(params.size()) + ", grads " +
                     std::to_string(grads.size()) + ", state " + std::to_string(state.m_.size()));
  }
  state.step_ += 1;
  const AdamConfig& c = state.config_;
  const double bias1 = 1.0 - std::pow(c.beta1, static_cast<double>(state.step_));
  const double bias2 = 1.0 - std::pow(c.beta2, static_cast<double>(state.step_));
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    state.m_[i] = c.beta1 * state.m_[i] + (1.0 - c.beta1) * g;
    state.v_[i] = c.beta2 * state.v_[i] + (1.0 - c.beta2) * g * g;
    const double m_hat = state.m_[i] / bias1;
    const double v_hat = state.v_[i] / bias2;
    params[i] -= c.lr * m_hat / (std::sqrt(v_hat) + c.eps);
  }
}

}  // namespace zmlhash
