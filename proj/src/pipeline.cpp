#include "timelock/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "timelock/error.hpp"
#include "timelock/metrics.hpp"

namespace timelock {

WarpSpec plan_warp(const Partition& p, std::size_t t1_target, std::size_t t2_target,
                   double pad_fraction, double f_samp, bool preserve_length) {
  if (t1_target < 1 || t2_target < 1)
    throw Error(ErrorCode::BadTarget, "target lengths must be >= 1");
  if (!(pad_fraction >= 0.0) || !std::isfinite(pad_fraction))
    throw Error(ErrorCode::BadTarget, "pad_fraction must be finite and >= 0");
  if (!(f_samp > 0.0)) throw Error(ErrorCode::BadRate, "f_samp must be positive");
  if (p.t1.empty() || p.t2.empty())
    throw Error(ErrorCode::DegenerateInterval, "partition has an empty warpable interval");
  if (preserve_length && t1_target + t2_target != p.t1.size() + p.t2.size())
    throw Error(ErrorCode::BadTarget,
                "targets " + std::to_string(t1_target) + " + " + std::to_string(t2_target) +
                    " do not preserve the warpable length " +
                    std::to_string(p.t1.size() + p.t2.size()));

  const auto pad = static_cast<std::size_t>(std::llround(pad_fraction * f_samp));
  WarpSpec spec;
  spec.t1_source_len = p.t1.size();
  spec.t2_source_len = p.t2.size();
  spec.t1_target_len = t1_target;
  spec.t2_target_len = t2_target;
  spec.pad_left = pad;
  spec.pad_right = pad;
  spec.preserve_length = preserve_length;
  return spec;
}

std::vector<double> linear_rescale(std::span<const double> x, std::size_t out_len) {
  if (x.empty()) throw Error(ErrorCode::EmptyInput, "empty sequence");
  std::vector<double> out(out_len, x[0]);
  if (out_len < 2 || x.size() < 2) return out;
  const double step = static_cast<double>(x.size() - 1) / static_cast<double>(out_len - 1);
  for (std::size_t k = 0; k < out_len; ++k) {
    const double pos = static_cast<double>(k) * step;
    const auto i = std::min(static_cast<std::size_t>(pos), x.size() - 2);
    const double frac = pos - static_cast<double>(i);
    out[k] = x[i] + frac * (x[i + 1] - x[i]);
  }
  return out;
}

namespace {

IntervalReport measure(std::span<const double> original, std::span<const double> warped,
                       double ratio, bool with_metrics) {
  IntervalReport r;
  r.ratio = ratio;
  r.source_len = original.size();
  r.target_len = warped.size();
  if (!with_metrics) return r;

  const auto ref = linear_rescale(original, warped.size());
  try {
    r.correlation = warped.size() >= 2 ? pearson(ref, warped)
                                       : std::numeric_limits<double>::quiet_NaN();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroVariance) throw;
    r.correlation = std::numeric_limits<double>::quiet_NaN();
  }
  r.dtw = dtw(original, warped);
  r.energy_in = energy(original);
  r.energy_out = energy(warped);
  return r;
}

}  // namespace

WarpReport warp_trial(const Trial& t, const Partition& p, const WarpSpec& spec,
                      const WarpOptions& opts) {
  if (p.total() != t.size())
    throw Error(ErrorCode::RangeOutOfBounds, "partition does not cover the trial");
  if (spec.t1_source_len != p.t1.size() || spec.t2_source_len != p.t2.size())
    throw Error(ErrorCode::BadTarget, "warp spec was planned for a different partition");
  if (spec.t1_target_len < 1 || spec.t2_target_len < 1)
    throw Error(ErrorCode::BadTarget, "target lengths must be >= 1");

  const std::span<const double> full(t.samples);
  const auto w1 = resample_padded(full, p.t1, spec.t1_target_len, spec.pad_left, spec.pad_right,
                                  opts.sinc, opts.pad_mode);
  const auto w2 = resample_padded(full, p.t2, spec.t2_target_len, spec.pad_left, spec.pad_right,
                                  opts.sinc, opts.pad_mode);

  WarpReport report;
  Trial& out = report.warped;
  out.f_samp = t.f_samp;
  out.samples.reserve(p.pre.size() + w1.size() + w2.size() + p.post.size());
  const auto pre = t.slice(p.pre);
  const auto post = t.slice(p.post);
  out.samples.insert(out.samples.end(), pre.begin(), pre.end());
  out.samples.insert(out.samples.end(), w1.begin(), w1.end());
  out.samples.insert(out.samples.end(), w2.begin(), w2.end());
  out.samples.insert(out.samples.end(), post.begin(), post.end());

  const std::size_t transition = p.onset() + w1.size();
  const std::size_t offset = transition + w2.size();
  report.warped_partition = make_partition(out.samples.size(), p.onset(), transition, offset);
  out.events = partition_events(report.warped_partition);

  report.per_interval[0] = measure(t.slice(p.t1), w1, spec.r1(), opts.compute_metrics);
  report.per_interval[1] = measure(t.slice(p.t2), w2, spec.r2(), opts.compute_metrics);
  return report;
}

FixedTargets batch_targets(std::span<const BatchItem> items, const TargetPolicy& policy,
                           bool preserve_length) {
  if (items.empty()) throw Error(ErrorCode::EmptyBatch, "no trials to align");
  const std::size_t total = items.front().partition.t1.size() + items.front().partition.t2.size();
  const std::size_t onset = items.front().partition.onset();
  for (const auto& it : items) {
    if (it.partition.total() != it.trial.size())
      throw Error(ErrorCode::InconsistentTrials, "partition does not cover its trial");
    if (it.partition.onset() != onset)
      throw Error(ErrorCode::InconsistentTrials, "trials disagree on the onset index");
    if (preserve_length && it.partition.t1.size() + it.partition.t2.size() != total)
      throw Error(ErrorCode::InconsistentTrials,
                  "trials disagree on len(t1) + len(t2) in length-preserving mode");
  }

  if (const auto* fixed = std::get_if<FixedTargets>(&policy)) return *fixed;

  double sum1 = 0.0, sum2 = 0.0;
  for (const auto& it : items) {
    sum1 += static_cast<double>(it.partition.t1.size());
    sum2 += static_cast<double>(it.partition.t2.size());
  }
  const auto n = static_cast<double>(items.size());
  // nearbyint under the default rounding mode rounds half to even.
  FixedTargets targets{static_cast<std::size_t>(std::nearbyint(sum1 / n)),
                       static_cast<std::size_t>(std::nearbyint(sum2 / n))};
  targets.t1 = std::max<std::size_t>(targets.t1, 1);
  targets.t2 = std::max<std::size_t>(targets.t2, 1);
  if (preserve_length) {
    targets.t1 = std::min(targets.t1, total - 1);
    targets.t2 = total - targets.t1;
  }
  return targets;
}

std::vector<WarpReport> align_batch(std::span<const BatchItem> items, const TargetPolicy& policy,
                                    double pad_fraction, const WarpOptions& opts,
                                    bool preserve_length) {
  const auto targets = batch_targets(items, policy, preserve_length);

  std::vector<WarpSpec> specs;
  specs.reserve(items.size());
  for (const auto& it : items)
    specs.push_back(plan_warp(it.partition, targets.t1, targets.t2, pad_fraction,
                              it.trial.f_samp, preserve_length));

  std::vector<WarpReport> out(items.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, items.size());
  std::vector<std::future<void>> jobs;
  jobs.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < items.size(); i += workers)
        out[i] = warp_trial(items[i].trial, items[i].partition, specs[i], opts);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace timelock
