#include "timelock/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <ostream>
#include <thread>

#include "timelock/error.hpp"
#include "timelock/io.hpp"

namespace timelock {

std::string_view to_string(Direction d) noexcept {
  return d == Direction::ContractT1ExpandT2 ? "contract_t1_expand_t2" : "expand_t1_contract_t2";
}

Direction parse_direction(std::string_view s) {
  if (s == "contract_t1_expand_t2") return Direction::ContractT1ExpandT2;
  if (s == "expand_t1_contract_t2") return Direction::ExpandT1ContractT2;
  throw Error(ErrorCode::BadConfig, "unknown direction '" + std::string(s) + "'");
}

void SweepConfig::validate() const {
  if (pad_fractions.empty() || fsamp_factors.empty() || directions.empty())
    throw Error(ErrorCode::BadConfig, "sweep grids must be nonempty");
  for (const double p : pad_fractions)
    if (!(p >= 0.0) || !std::isfinite(p))
      throw Error(ErrorCode::BadConfig, "pad fractions must be finite and >= 0");
  for (const double f : fsamp_factors)
    if (!(f > 0.0 && f <= 1.0))
      throw Error(ErrorCode::BadConfig, "sampling-rate factors must lie in (0, 1]");
  if (!std::is_sorted(fsamp_factors.begin(), fsamp_factors.end(), std::greater<>{}))
    throw Error(ErrorCode::BadConfig, "sampling-rate factors must be sorted descending");
  if (!(warp_magnitude > 0.0) || !std::isfinite(warp_magnitude))
    throw Error(ErrorCode::BadConfig, "warp magnitude must be positive");
  warp.sinc.validate();
}

namespace {

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += io::format_double(v[i]);
  }
  return s;
}

std::string_view window_name(WindowKind w) {
  switch (w) {
    case WindowKind::Kaiser: return "kaiser";
    case WindowKind::Hann: return "hann";
    case WindowKind::Blackman: return "blackman";
  }
  return "?";
}

}  // namespace

std::vector<std::string> SweepConfig::describe() const {
  std::string dirs;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    if (i) dirs += ',';
    dirs += to_string(directions[i]);
  }
  const auto& s = warp.sinc;
  return {
      "pad_fractions: " + join(pad_fractions),
      "fsamp_factors: " + join(fsamp_factors),
      "directions: " + dirs,
      "warp_magnitude: " + io::format_double(warp_magnitude),
      "f_samp: " + io::format_double(synth.f_samp),
      "f1: " + io::format_double(synth.f1),
      "f2: " + io::format_double(synth.f2),
      "duration: " + io::format_double(synth.duration_s),
      "event_fracs: " + join({synth.event_fracs.begin(), synth.event_fracs.end()}),
      "window: " + std::string(window_name(s.window)) + " half_width=" +
          std::to_string(s.half_width) + " beta=" + io::format_double(s.beta) +
          " anti_alias=" + (s.anti_alias ? "1" : "0"),
      std::string("pad_mode: ") + (warp.pad_mode == PadMode::Zero ? "zero" : "adjacent"),
  };
}

FixedTargets direction_targets(const Partition& p, Direction d, double magnitude) {
  const double len1 = static_cast<double>(p.t1.size());
  const double scale = d == Direction::ContractT1ExpandT2 ? 1.0 - magnitude : 1.0 + magnitude;
  const std::size_t total = p.t1.size() + p.t2.size();
  const double t1 = std::nearbyint(len1 * scale);
  if (!(t1 >= 1.0) || t1 >= static_cast<double>(total))
    throw Error(ErrorCode::BadTarget, "warp magnitude leaves an empty interval");
  const auto t1_target = static_cast<std::size_t>(t1);
  return {t1_target, total - t1_target};
}

std::vector<SweepRow> sweep_padding(const Trial& trial, const SweepConfig& cfg,
                                    double fsamp_factor) {
  cfg.validate();
  struct Cell {
    Direction dir;
    double pad;
  };
  std::vector<Cell> cells;
  for (const auto d : cfg.directions)
    for (const double p : cfg.pad_fractions) cells.push_back({d, p});

  // Two rows (t1, t2) per cell, in cell order.
  std::vector<std::array<SweepRow, 2>> results(cells.size());
  const auto run = [&](std::size_t c) {
    auto& rows = results[c];
    for (int k = 0; k < 2; ++k) {
      rows[k].fsamp_factor = fsamp_factor;
      rows[k].direction = cells[c].dir;
      rows[k].interval = k + 1;
      rows[k].pad_fraction = cells[c].pad;
    }
    try {
      const auto part = partition_from_events(trial);
      const auto targets = direction_targets(part, cells[c].dir, cfg.warp_magnitude);
      const auto spec = plan_warp(part, targets.t1, targets.t2, cells[c].pad, trial.f_samp);
      const auto report = warp_trial(trial, part, spec, cfg.warp);
      for (int k = 0; k < 2; ++k) {
        const auto& iv = report.per_interval[static_cast<std::size_t>(k)];
        rows[k].ratio = iv.ratio;
        rows[k].correlation = iv.correlation;
        rows[k].dtw_distance = iv.dtw.distance;
        rows[k].dtw_similarity = iv.dtw.similarity();
        rows[k].energy_ratio = iv.energy_ratio();
      }
    } catch (const Error& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      for (auto& r : rows) {
        r.ratio = r.correlation = r.dtw_distance = r.dtw_similarity = r.energy_ratio = nan;
        r.status = e.what();
      }
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(cells.size(), 1));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t c = w; c < cells.size(); c += workers) run(c);
    }));
  for (auto& j : jobs) j.get();

  std::vector<SweepRow> rows;
  rows.reserve(cells.size() * 2);
  const std::size_t npad = cfg.pad_fractions.size();
  for (std::size_t d = 0; d < cfg.directions.size(); ++d)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t p = 0; p < npad; ++p) rows.push_back(results[d * npad + p][k]);
  return rows;
}

std::vector<SweepRow> sweep_fsamp(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<SweepRow> rows;
  for (const double factor : cfg.fsamp_factors) {
    auto spec = cfg.synth;
    spec.f_samp = cfg.synth.f_samp * factor;
    std::vector<SweepRow> part;
    try {
      part = sweep_padding(generate(spec), cfg, factor);
    } catch (const Error& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      for (const auto d : cfg.directions)
        for (int k = 1; k <= 2; ++k)
          for (const double p : cfg.pad_fractions)
            part.push_back({factor, d, k, p, nan, nan, nan, nan, nan, e.what()});
    }
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (const char c : s) {
    if (c == '"') q += '"';
    q += c == '\n' ? ' ' : c;
  }
  return q + '"';
}

void write_header(std::ostream& out, const SweepConfig& cfg) {
  for (const auto& line : cfg.describe()) out << "# " << line << '\n';
}

}  // namespace

void write_padding_table(std::ostream& out, const SweepConfig& cfg,
                         const std::vector<SweepRow>& rows) {
  write_header(out, cfg);
  out << "direction,interval,pad_fraction,ratio,correlation,dtw_distance,dtw_similarity,"
         "energy_ratio,status\n";
  for (const auto& r : rows) {
    out << to_string(r.direction) << ",t" << r.interval << ',' << io::format_double(r.pad_fraction)
        << ',' << io::format_double(r.ratio) << ',' << io::format_double(r.correlation) << ','
        << io::format_double(r.dtw_distance) << ',' << io::format_double(r.dtw_similarity) << ','
        << io::format_double(r.energy_ratio) << ',' << csv_field(r.status) << '\n';
  }
}

void write_fsamp_table(std::ostream& out, const SweepConfig& cfg,
                       const std::vector<SweepRow>& rows) {
  write_header(out, cfg);
  out << "fsamp_factor,f_samp,direction,interval,pad_fraction,ratio,correlation,dtw_distance,"
         "dtw_similarity,energy_ratio,status\n";
  for (const auto& r : rows) {
    out << io::format_double(r.fsamp_factor) << ','
        << io::format_double(cfg.synth.f_samp * r.fsamp_factor) << ',' << to_string(r.direction)
        << ",t" << r.interval << ',' << io::format_double(r.pad_fraction) << ','
        << io::format_double(r.ratio) << ',' << io::format_double(r.correlation) << ','
        << io::format_double(r.dtw_distance) << ',' << io::format_double(r.dtw_similarity) << ','
        << io::format_double(r.energy_ratio) << ',' << csv_field(r.status) << '\n';
  }
}

}  // namespace timelock
