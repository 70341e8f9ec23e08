#include "timelock/synth.hpp"

#include <cmath>
#include <string>

#include "timelock/error.hpp"

namespace timelock {

Trial generate(const SynthSpec& spec) {
  if (!(spec.f_samp > 0.0) || !std::isfinite(spec.f_samp))
    throw Error(ErrorCode::BadRate, "f_samp must be positive");
  const double nyq = spec.f_samp / 2.0;
  for (const double f : {spec.f1, spec.f2}) {
    if (!(std::abs(f) < nyq))
      throw Error(ErrorCode::NyquistViolation,
                  "frequency " + std::to_string(f) + " Hz not below Nyquist " + std::to_string(nyq));
  }
  const auto& fr = spec.event_fracs;
  if (!(fr[0] > 0.0 && fr[0] < fr[1] && fr[1] < fr[2] && fr[2] < 1.0))
    throw Error(ErrorCode::BadEventFracs, "event fractions must be strictly increasing in (0, 1)");
  if (!(spec.duration_s > 0.0)) throw Error(ErrorCode::BadConfig, "duration must be positive");

  const auto len = static_cast<std::size_t>(std::llround(spec.duration_s * spec.f_samp));
  if (len == 0) throw Error(ErrorCode::EmptySignal, "duration shorter than one sample");

  Trial t;
  t.f_samp = spec.f_samp;
  t.samples.resize(len);
  const double w1 = 2.0 * std::numbers::pi * spec.f1;
  const double w2 = 2.0 * std::numbers::pi * spec.f2;
  for (std::size_t n = 0; n < len; ++n) {
    const double time = static_cast<double>(n) / spec.f_samp;
    t.samples[n] = spec.amplitudes[0] * std::sin(w1 * time + spec.phases[0]) +
                   spec.amplitudes[1] * std::sin(w2 * time + spec.phases[1]);
  }

  const char* labels[] = {"onset", "transition", "offset"};
  for (std::size_t e = 0; e < 3; ++e) {
    const auto idx = static_cast<std::size_t>(std::llround(fr[e] * static_cast<double>(len)));
    t.events.push_back({idx, labels[e]});
  }
  return validate_trial(std::move(t));
}

}  // namespace timelock
