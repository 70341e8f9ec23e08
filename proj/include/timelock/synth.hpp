#pragma once

#include <array>
#include <numbers>

#include "timelock/trial.hpp"

namespace timelock {

/// Two-tone demonstration trial: a1 sin(2 pi f1 t + p1) + a2 sin(2 pi f2 t + p2)
/// with onset/transition/offset markers at fixed fractions of the duration.
struct SynthSpec {
  double f_samp = 2048.0;
  double f1 = 5.0 / std::numbers::pi;
  double f2 = 5.0 / 2.0;
  double duration_s = 4.0;
  std::array<double, 3> event_fracs{0.25, 0.50, 0.75};
  std::array<double, 2> amplitudes{1.0, 1.0};
  std::array<double, 2> phases{0.0, 0.0};
};

/// Throws NyquistViolation, BadEventFracs or BadRate.
Trial generate(const SynthSpec& spec);

}  // namespace timelock
