// timelock: command-line front end for event-locked trial warping.
//
//   timelock synth         -o trial.csv                 synthetic two-tone trial
//   timelock warp          trial.csv --t1 N -o out.csv  warp one trial
//   timelock sweep-padding -o pad.csv                   padding sweep table
//   timelock sweep-fsamp   -o fs.csv                    sampling-rate sweep table
//   timelock dtw-matrix    a.csv b.csv -o cost.csv      DTW cost matrix and path
//
// Exit codes: 0 success, 2 malformed input or arguments, 3 domain error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "timelock/error.hpp"
#include "timelock/io.hpp"
#include "timelock/metrics.hpp"
#include "timelock/pipeline.hpp"
#include "timelock/sweep.hpp"
#include "timelock/synth.hpp"

namespace fs = std::filesystem;
using namespace timelock;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  return out;
}

struct FilterArgs {
  int half_width = 32;
  std::string window = "kaiser";
  double beta = 14.0;
  bool no_anti_alias = false;
  bool zero_pad = false;

  void attach(CLI::App* app) {
    app->add_option("--half-width", half_width, "Filter half-width in input samples")
        ->capture_default_str();
    app->add_option("--window", window, "Window: kaiser, hann or blackman")
        ->check(CLI::IsMember({"kaiser", "hann", "blackman"}))
        ->capture_default_str();
    app->add_option("--beta", beta, "Kaiser beta")->capture_default_str();
    app->add_flag("--no-anti-alias", no_anti_alias, "Keep the full cutoff when contracting");
    app->add_flag("--zero-pad", zero_pad, "Pad intervals with zeros instead of neighbours");
  }

  WarpOptions options() const {
    WarpOptions o;
    o.sinc.half_width = half_width;
    o.sinc.window = window == "hann"       ? WindowKind::Hann
                    : window == "blackman" ? WindowKind::Blackman
                                           : WindowKind::Kaiser;
    o.sinc.beta = beta;
    o.sinc.anti_alias = !no_anti_alias;
    o.pad_mode = zero_pad ? PadMode::Zero : PadMode::Adjacent;
    return o;
  }
};

struct SynthArgs {
  double f_samp = 2048.0;
  double f1 = SynthSpec{}.f1;
  double f2 = SynthSpec{}.f2;
  double duration = 4.0;
  std::string event_fracs = "0.25,0.5,0.75";
  std::string amplitudes = "1,1";
  std::string phases = "0,0";

  void attach(CLI::App* app) {
    app->add_option("--f-samp", f_samp, "Sampling frequency (Hz)")->capture_default_str();
    app->add_option("--f1", f1, "First tone (Hz), default 5/pi")->capture_default_str();
    app->add_option("--f2", f2, "Second tone (Hz)")->capture_default_str();
    app->add_option("--duration", duration, "Trial duration (s)")->capture_default_str();
    app->add_option("--event-fracs", event_fracs, "Onset,transition,offset as fractions of the trial")
        ->capture_default_str();
    app->add_option("--amplitudes", amplitudes, "Tone amplitudes a1,a2")->capture_default_str();
    app->add_option("--phases", phases, "Tone phases p1,p2 (rad)")->capture_default_str();
  }

  SynthSpec spec() const {
    const auto fixed = [](const std::string& text, std::size_t n, const char* what) {
      auto v = io::parse_double_list(text);
      if (v.size() != n)
        throw io::ParseError(std::string(what) + " needs " + std::to_string(n) + " values");
      return v;
    };
    SynthSpec s;
    s.f_samp = f_samp;
    s.f1 = f1;
    s.f2 = f2;
    s.duration_s = duration;
    const auto ev = fixed(event_fracs, 3, "--event-fracs");
    std::copy(ev.begin(), ev.end(), s.event_fracs.begin());
    const auto am = fixed(amplitudes, 2, "--amplitudes");
    std::copy(am.begin(), am.end(), s.amplitudes.begin());
    const auto ph = fixed(phases, 2, "--phases");
    std::copy(ph.begin(), ph.end(), s.phases.begin());
    return s;
  }
};

struct SweepArgs {
  std::string pad_fractions = "0.001,0.002,0.005,0.01,0.02,0.05,0.1,0.15,0.2,0.25";
  std::string fsamp_factors = "1,1/2,1/4,1/8,1/16,1/32";
  std::string directions = "contract_t1_expand_t2,expand_t1_contract_t2";
  double warp_magnitude = 0.2;
  std::string config;
  std::string output;
  SynthArgs synth;
  FilterArgs filter;

  void attach(CLI::App* app, bool with_factors) {
    app->add_option("--config", config,
                    "Key-value file (key = value per line); command-line flags win")
        ->check(CLI::ExistingFile);
    app->add_option("--pad-fractions", pad_fractions, "Padding grid as fractions of f_samp")
        ->capture_default_str();
    if (with_factors)
      app->add_option("--fsamp-factors", fsamp_factors, "Sampling-rate factors, descending")
          ->capture_default_str();
    app->add_option("--directions", directions, "Warp directions")->capture_default_str();
    app->add_option("--warp-magnitude", warp_magnitude, "Fractional change of t1")
        ->capture_default_str();
    app->add_option("-o,--output", output, "Output table")->required();
    synth.attach(app);
    filter.attach(app);
  }

  SweepConfig build() const {
    SweepConfig cfg;
    cfg.pad_fractions = io::parse_double_list(pad_fractions);
    cfg.fsamp_factors = io::parse_double_list(fsamp_factors);
    cfg.directions.clear();
    std::string_view rest = directions;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      auto item = rest.substr(0, comma);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      cfg.directions.push_back(parse_direction(item));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    cfg.warp_magnitude = warp_magnitude;
    cfg.synth = synth.spec();
    cfg.warp = filter.options();
    return cfg;
  }
};

// Fills options of `app` that were not given on the command line from a
// key-value file. Keys are option long names with '_' or '-' separators.
void apply_config_file(CLI::App* app, const std::string& path) {
  if (path.empty()) return;
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(path);
  } catch (const CLI::Error& e) {
    throw io::ParseError(path + ": " + e.what());
  }
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '_', '-');
    CLI::Option* opt = app->get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config" || key == "output")
      throw io::ParseError(path + ": unknown key '" + item.name + "'");
    if (opt->count() > 0) continue;
    std::string joined;
    for (std::size_t i = 0; i < item.inputs.size(); ++i) joined += (i ? "," : "") + item.inputs[i];
    opt->add_result(joined);
    opt->run_callback();
  }
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, std::size_t len) {
  if (text.empty()) return {0, len};
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    const auto b = colon == 0 ? 0 : std::stoull(text.substr(0, colon));
    const auto e = colon + 1 == text.size() ? len : std::stoull(text.substr(colon + 1));
    if (b >= e || e > len)
      throw Error(ErrorCode::RangeOutOfBounds, "range " + text + " outside [0, " +
                                                   std::to_string(len) + ")");
    return {b, e};
  } catch (const std::logic_error&) {
    throw io::ParseError("range must look like BEGIN:END, got '" + text + "'");
  }
}

int run_synth(const SynthArgs& args, const std::string& output, std::string events_out) {
  const auto trial = generate(args.spec());
  io::write_trial(output, trial, {"source: timelock synth"});
  if (events_out.empty()) events_out = io::events_sidecar(output).string();
  io::write_events(events_out, trial.events);
  return 0;
}

struct WarpArgs {
  std::string input;
  std::string events;
  std::optional<std::size_t> onset, transition, offset;
  std::optional<std::size_t> t1, t2;
  double pad_fraction = 0.1;
  bool no_preserve = false;
  std::string output;
  std::string report;
  FilterArgs filter;
};

int run_warp(const WarpArgs& a) {
  Trial trial = io::read_trial(a.input);
  if (a.onset || a.transition || a.offset) {
    if (!(a.onset && a.transition && a.offset))
      throw io::ParseError("--onset, --transition and --offset must be given together");
    trial.events = {{*a.onset, std::string(kOnset)},
                    {*a.transition, std::string(kTransition)},
                    {*a.offset, std::string(kOffset)}};
  } else {
    const fs::path sidecar = a.events.empty() ? io::events_sidecar(a.input) : fs::path(a.events);
    if (!fs::exists(sidecar))
      throw io::ParseError("no events: pass --events, --onset/--transition/--offset, or provide " +
                           sidecar.string());
    trial.events = io::read_events(sidecar);
  }
  trial = validate_trial(std::move(trial));
  const auto part = partition_from_events(trial);

  const bool preserve = !a.no_preserve;
  std::size_t t1 = a.t1.value_or(part.t1.size());
  std::size_t t2 = 0;
  if (a.t2)
    t2 = *a.t2;
  else if (preserve)
    t2 = part.t1.size() + part.t2.size() - std::min(t1, part.t1.size() + part.t2.size());
  else
    t2 = part.t2.size();
  const auto spec = plan_warp(part, t1, t2, a.pad_fraction, trial.f_samp, preserve);
  const auto report = warp_trial(trial, part, spec, a.filter.options());

  io::write_trial(a.output, report.warped, {"source: timelock warp " + fs::path(a.input).filename().string()});
  io::write_events(io::events_sidecar(a.output), report.warped.events);

  const std::string report_path = a.report.empty() ? a.output + ".report.csv" : a.report;
  auto out = open_output(report_path);
  out << "interval,ratio,source_len,target_len,correlation,dtw_distance,dtw_normalized,"
         "dtw_similarity,energy_in,energy_out,energy_ratio\n";
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& iv = report.per_interval[k];
    out << 't' << (k + 1) << ',' << io::format_double(iv.ratio) << ',' << iv.source_len << ','
        << iv.target_len << ',' << io::format_double(iv.correlation) << ','
        << io::format_double(iv.dtw.distance) << ',' << io::format_double(iv.dtw.normalized_distance)
        << ',' << io::format_double(iv.dtw.similarity()) << ',' << io::format_double(iv.energy_in)
        << ',' << io::format_double(iv.energy_out) << ',' << io::format_double(iv.energy_ratio())
        << '\n';
  }
  return 0;
}

struct DtwArgs {
  std::string a, b, output, path_out, range_a, range_b;
};

int run_dtw(const DtwArgs& args) {
  const Trial ta = io::read_trial(args.a);
  const Trial tb = io::read_trial(args.b);
  const auto [ab, ae] = parse_range(args.range_a, ta.size());
  const auto [bb, be] = parse_range(args.range_b, tb.size());
  const auto res = dtw(ta.slice({ab, ae}), tb.slice({bb, be}));

  auto out = open_output(args.output);
  out << "# distance: " << io::format_double(res.distance) << '\n'
      << "# normalized_distance: " << io::format_double(res.normalized_distance) << '\n';
  for (std::size_t i = 0; i < res.cost_matrix.rows(); ++i) {
    const auto row = res.cost_matrix.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << io::format_double(row[j]);
    out << '\n';
  }

  const std::string path_file = args.path_out.empty() ? args.output + ".path.csv" : args.path_out;
  auto pout = open_output(path_file);
  pout << "i,j,cost\n";
  for (const auto& [i, j] : res.path)
    pout << i << ',' << j << ',' << io::format_double(res.cost_matrix(i, j)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Event-locked trial warping by windowed-sinc resampling"};
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "Write the synthetic two-tone trial");
  SynthArgs synth_args;
  std::string synth_out, synth_events;
  synth_args.attach(synth);
  synth->add_option("-o,--output", synth_out, "Trial CSV to write")->required();
  synth->add_option("--events-out", synth_events, "Events JSON (default <output>.events.json)");

  // warp
  auto* warp = app.add_subcommand("warp", "Warp the t1/t2 intervals of one trial");
  WarpArgs warp_args;
  warp->add_option("input", warp_args.input, "Trial CSV")->required()->check(CLI::ExistingFile);
  warp->add_option("--events", warp_args.events, "Events JSON (default <input>.events.json)");
  warp->add_option("--onset", warp_args.onset, "Onset sample index");
  warp->add_option("--transition", warp_args.transition, "Transition sample index");
  warp->add_option("--offset", warp_args.offset, "Offset sample index");
  warp->add_option("--t1", warp_args.t1, "Target length of t1 (samples)");
  warp->add_option("--t2", warp_args.t2, "Target length of t2 (default: preserve total)");
  warp->add_option("--pad-fraction", warp_args.pad_fraction, "Padding per side as a fraction of f_samp")
      ->capture_default_str();
  warp->add_flag("--no-preserve", warp_args.no_preserve, "Allow t1 + t2 targets to change the length");
  warp->add_option("-o,--output", warp_args.output, "Warped trial CSV")->required();
  warp->add_option("--report", warp_args.report, "Report CSV (default <output>.report.csv)");
  warp_args.filter.attach(warp);

  // sweeps
  auto* sweep_pad = app.add_subcommand("sweep-padding", "Quality versus padding on the synthetic trial");
  SweepArgs pad_args;
  pad_args.attach(sweep_pad, false);
  auto* sweep_fs = app.add_subcommand("sweep-fsamp", "Padding sweep at reduced sampling rates");
  SweepArgs fs_args;
  fs_args.attach(sweep_fs, true);

  // dtw-matrix
  auto* dtwm = app.add_subcommand("dtw-matrix", "Accumulated DTW cost matrix and warping path");
  DtwArgs dtw_args;
  dtwm->add_option("input_a", dtw_args.a, "First trial CSV")->required()->check(CLI::ExistingFile);
  dtwm->add_option("input_b", dtw_args.b, "Second trial CSV")->required()->check(CLI::ExistingFile);
  dtwm->add_option("-o,--output", dtw_args.output, "Cost matrix CSV")->required();
  dtwm->add_option("--path-out", dtw_args.path_out, "Path CSV (default <output>.path.csv)");
  dtwm->add_option("--a-range", dtw_args.range_a, "Sample range BEGIN:END of the first input");
  dtwm->add_option("--b-range", dtw_args.range_b, "Sample range BEGIN:END of the second input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*synth) return run_synth(synth_args, synth_out, synth_events);
    if (*warp) return run_warp(warp_args);
    if (*sweep_pad) {
      apply_config_file(sweep_pad, pad_args.config);
      const auto cfg = pad_args.build();
      const auto rows = sweep_padding(generate(cfg.synth), cfg);
      auto out = open_output(pad_args.output);
      write_padding_table(out, cfg, rows);
      return 0;
    }
    if (*sweep_fs) {
      apply_config_file(sweep_fs, fs_args.config);
      const auto cfg = fs_args.build();
      const auto rows = sweep_fsamp(cfg);
      auto out = open_output(fs_args.output);
      write_fsamp_table(out, cfg, rows);
      return 0;
    }
    if (*dtwm) return run_dtw(dtw_args);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
