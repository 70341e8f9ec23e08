#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace timelock {

/// Half-open sample index range [begin, end).
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return end == begin; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct EventMarker {
  std::size_t index = 0;
  std::string label;

  friend bool operator==(const EventMarker&, const EventMarker&) = default;
};

inline constexpr std::string_view kOnset = "onset";
inline constexpr std::string_view kTransition = "transition";
inline constexpr std::string_view kOffset = "offset";

/// A uniformly sampled single-channel trial with ordered event markers.
struct Trial {
  std::vector<double> samples;
  double f_samp = 0.0;
  std::vector<EventMarker> events;

  double nyquist() const noexcept { return f_samp / 2.0; }
  std::size_t size() const noexcept { return samples.size(); }

  std::span<const double> slice(IndexRange r) const {
    return std::span<const double>(samples).subspan(r.begin, r.size());
  }

  friend bool operator==(const Trial&, const Trial&) = default;
};

/// Returns the trial unchanged, or throws Error (NonFinite, EmptySignal,
/// BadEvents, BadRate).
Trial validate_trial(Trial t);

/// Seconds to sample index: nearest sample, ties toward the earlier one.
std::size_t index_from_seconds(double seconds, double f_samp);

/// Decomposition of a trial into a fixed prefix, two warpable intervals
/// (t1, t2) and a fixed suffix. The four ranges tile [0, len).
struct Partition {
  IndexRange pre;
  IndexRange t1;
  IndexRange t2;
  IndexRange post;

  std::size_t total() const noexcept { return post.end; }
  std::size_t onset() const noexcept { return t1.begin; }
  std::size_t transition() const noexcept { return t2.begin; }
  std::size_t offset() const noexcept { return t2.end; }

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Builds a partition from onset/transition/offset indices on a trial of
/// length len. Throws DegenerateInterval or RangeOutOfBounds.
Partition make_partition(std::size_t len, std::size_t onset, std::size_t transition,
                         std::size_t offset);

/// Looks up exactly one marker per label. The transition sample belongs to t2.
Partition partition_from_events(const Trial& t, std::string_view onset_label = kOnset,
                                std::string_view transition_label = kTransition,
                                std::string_view offset_label = kOffset);

/// Onset/transition/offset markers matching a partition.
std::vector<EventMarker> partition_events(const Partition& p);

/// Target lengths, padding and derived rescale ratios for the two warpable
/// intervals. ratio = source length / target length; > 1 contracts.
struct WarpSpec {
  std::size_t t1_source_len = 0;
  std::size_t t2_source_len = 0;
  std::size_t t1_target_len = 0;
  std::size_t t2_target_len = 0;
  std::size_t pad_left = 0;
  std::size_t pad_right = 0;
  bool preserve_length = true;

  double r1() const noexcept {
    return static_cast<double>(t1_source_len) / static_cast<double>(t1_target_len);
  }
  double r2() const noexcept {
    return static_cast<double>(t2_source_len) / static_cast<double>(t2_target_len);
  }
  bool t1_contracted() const noexcept { return t1_source_len > t1_target_len; }
  bool t2_contracted() const noexcept { return t2_source_len > t2_target_len; }
};

/// Row-major dense matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * cols_, cols_);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

using PathStep = std::pair<std::size_t, std::size_t>;

struct DtwResult {
  Matrix cost_matrix;          // accumulated squared-difference costs
  std::vector<PathStep> path;  // (0,0) .. (n-1,m-1)
  double distance = 0.0;       // sqrt of the final accumulated cost
  double normalized_distance = 0.0;

  double similarity() const noexcept { return 1.0 - normalized_distance; }
};

struct IntervalReport {
  double ratio = 1.0;
  std::size_t source_len = 0;
  std::size_t target_len = 0;
  double correlation = 0.0;
  DtwResult dtw;
  double energy_in = 0.0;
  double energy_out = 0.0;

  /// E_out * ratio / E_in; 1 when energy scales exactly with the ratio.
  double energy_ratio() const noexcept;
};

struct WarpReport {
  Trial warped;
  Partition warped_partition;
  std::array<IntervalReport, 2> per_interval;
};

}  // namespace timelock
