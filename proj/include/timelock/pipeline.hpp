#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "timelock/resampler.hpp"
#include "timelock/trial.hpp"

namespace timelock {

/// Derives a WarpSpec for the partition's two warpable intervals. Padding is
/// round(pad_fraction * f_samp) samples on each side of each interval. In
/// preserving mode the targets must add up to len(t1) + len(t2).
/// Throws BadTarget.
WarpSpec plan_warp(const Partition& p, std::size_t t1_target, std::size_t t2_target,
                   double pad_fraction, double f_samp, bool preserve_length = true);

/// Options that are not part of the warp itself.
struct WarpOptions {
  SincConfig sinc{};
  PadMode pad_mode = PadMode::Adjacent;
  bool compute_metrics = true;  // correlation, DTW and energy per interval
};

/// Linear interpolation of x onto out_len points with endpoints pinned. Warped
/// intervals are correlated against this rescaled original.
std::vector<double> linear_rescale(std::span<const double> x, std::size_t out_len);

/// pre ++ resample(t1) ++ resample(t2) ++ post. The fixed intervals are
/// copied verbatim; the warped trial carries onset/transition/offset markers
/// at their new positions.
WarpReport warp_trial(const Trial& t, const Partition& p, const WarpSpec& spec,
                      const WarpOptions& opts = {});

struct MeanLengths {};
struct FixedTargets {
  std::size_t t1 = 0;
  std::size_t t2 = 0;
};
using TargetPolicy = std::variant<MeanLengths, FixedTargets>;

struct BatchItem {
  Trial trial;
  Partition partition;
};

/// Target lengths chosen by the policy. MeanLengths rounds each mean
/// half-to-even, then in preserving mode sets t2 = total - t1.
/// Throws EmptyBatch or InconsistentTrials.
FixedTargets batch_targets(std::span<const BatchItem> items, const TargetPolicy& policy,
                           bool preserve_length = true);

/// Warps every trial to common interval lengths so that all event indices
/// coincide. All trials must share their onset index; in preserving mode
/// they must also share len(t1) + len(t2). Trials are warped concurrently
/// once the targets are fixed.
std::vector<WarpReport> align_batch(std::span<const BatchItem> items, const TargetPolicy& policy,
                                    double pad_fraction, const WarpOptions& opts = {},
                                    bool preserve_length = true);

}  // namespace timelock
