#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "timelock/pipeline.hpp"
#include "timelock/synth.hpp"

namespace timelock {

enum class Direction { ContractT1ExpandT2, ExpandT1ContractT2 };

std::string_view to_string(Direction d) noexcept;
Direction parse_direction(std::string_view s);

/// Grid for the padding and sampling-rate sweeps over the synthetic trial.
struct SweepConfig {
  std::vector<double> pad_fractions{0.001, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1, 0.15, 0.2, 0.25};
  std::vector<double> fsamp_factors{1.0, 1.0 / 2, 1.0 / 4, 1.0 / 8, 1.0 / 16, 1.0 / 32};
  std::vector<Direction> directions{Direction::ContractT1ExpandT2, Direction::ExpandT1ContractT2};
  double warp_magnitude = 0.2;
  SynthSpec synth{};
  WarpOptions warp{};

  /// Throws BadConfig: empty grids, negative pads, factors outside (0, 1]
  /// or not sorted descending, non-positive magnitude.
  void validate() const;

  /// `key: value` lines echoed at the top of every sweep table.
  std::vector<std::string> describe() const;
};

/// Length-preserving targets that shrink (or grow) t1 by `magnitude` of its
/// length and give the difference to t2.
FixedTargets direction_targets(const Partition& p, Direction d, double magnitude);

struct SweepRow {
  double fsamp_factor = 1.0;
  Direction direction = Direction::ContractT1ExpandT2;
  int interval = 1;  // 1 or 2
  double pad_fraction = 0.0;
  double ratio = 1.0;
  double correlation = 0.0;
  double dtw_distance = 0.0;
  double dtw_similarity = 0.0;
  double energy_ratio = 0.0;
  std::string status = "ok";
};

/// Warps `trial` for every (direction, pad_fraction) cell. Rows are ordered
/// by direction, interval, then pad fraction. A failing cell yields rows
/// whose status carries the error instead of aborting the sweep.
std::vector<SweepRow> sweep_padding(const Trial& trial, const SweepConfig& cfg,
                                    double fsamp_factor = 1.0);

/// Padding sweep of the synthetic trial regenerated at factor * f_samp for
/// every configured factor.
std::vector<SweepRow> sweep_fsamp(const SweepConfig& cfg);

void write_padding_table(std::ostream& out, const SweepConfig& cfg,
                         const std::vector<SweepRow>& rows);
void write_fsamp_table(std::ostream& out, const SweepConfig& cfg,
                       const std::vector<SweepRow>& rows);

}  // namespace timelock
