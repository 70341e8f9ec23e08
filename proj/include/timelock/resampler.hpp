#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "timelock/trial.hpp"

namespace timelock {

enum class WindowKind { Kaiser, Hann, Blackman };

/// Windowed-sinc interpolation filter. half_width is the window support in
/// input samples on each side of the evaluation point.
struct SincConfig {
  int half_width = 32;
  WindowKind window = WindowKind::Kaiser;
  double beta = 14.0;  // Kaiser only
  bool anti_alias = true;

  /// Throws BadConfig unless half_width >= 4 and (Kaiser) beta is finite and > 0.
  void validate() const;
};

/// How the samples outside the target range are filled before resampling.
enum class PadMode {
  Adjacent,  // true neighbouring samples, edge-replicated past the trial bounds
  Zero,
};

/// Window value at normalized offset u in [-1, 1]; zero outside.
double window_value(const SincConfig& cfg, double u);

/// Evaluates the band-limited interpolant of `segment` at fractional sample
/// positions. cutoff in (0, 1] scales the sinc bandwidth relative to the
/// input Nyquist. Kernel weights are normalized to unit DC gain; taps that
/// fall outside the segment read the nearest edge sample.
std::vector<double> interpolate_at(std::span<const double> segment,
                                   std::span<const double> positions, double cutoff,
                                   const SincConfig& cfg);

/// Resamples a segment to out_len samples with the first and last output
/// samples on the first and last input samples.
std::vector<double> resample(std::span<const double> segment, std::size_t out_len,
                             const SincConfig& cfg = {});

/// Resamples full[range] to out_len samples after extending it by pad_left
/// and pad_right neighbouring samples, so that kernel truncation happens in
/// the padding instead of inside the range. Only the samples on the target
/// interval's grid are returned.
std::vector<double> resample_padded(std::span<const double> full, IndexRange range,
                                    std::size_t out_len, std::size_t pad_left,
                                    std::size_t pad_right, const SincConfig& cfg = {},
                                    PadMode mode = PadMode::Adjacent);

}  // namespace timelock
