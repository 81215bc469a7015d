#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace zmlhash {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Per-parameter-block optimizer state. Accumulators are shaped like the
// parameter block they belong to; the step counter only moves forward.
class AdamState {
 public:
  AdamState(std::size_t length, AdamConfig config = {});

  const AdamConfig& config() const noexcept { return config_; }
  std::int64_t steps() const noexcept { return step_; }
  std::span<const double> first_moment() const noexcept { return m_; }
  std::span<const double> second_moment() const noexcept { return v_; }

  friend void adam_step(std::span<double> params, std::span<const double> grads,
                        AdamState& state);

 private:
  AdamConfig config_;
  std::vector<double> m_;
  std::vector<double> v_;
  std::int64_t step_ = 0;
};

// Standard Adam update with bias correction, in place.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state);

}  // namespace zmlhash
