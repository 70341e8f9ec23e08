#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "timelock/trial.hpp"

namespace timelock::io {

/// Malformed input file. Distinct from timelock::Error, which reports
/// domain violations on well-formed input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

/// Trial CSV: `# key: value` metadata lines (f_samp required), then one
/// sample per line.
///
///   # f_samp: 2048
///   0
///   0.0061...
Trial parse_trial(std::istream& in, std::string_view source = "<stream>");
Trial read_trial(const std::filesystem::path& path);
void write_trial(std::ostream& out, const Trial& t,
                 const std::vector<std::string>& extra_metadata = {});
void write_trial(const std::filesystem::path& path, const Trial& t,
                 const std::vector<std::string>& extra_metadata = {});

/// Events sidecar: {"events": [{"index": 2048, "label": "onset"}, ...]}
std::vector<EventMarker> parse_events(std::istream& in, std::string_view source = "<stream>");
std::vector<EventMarker> read_events(const std::filesystem::path& path);
void write_events(const std::filesystem::path& path, const std::vector<EventMarker>& events);

/// Default sidecar location next to a trial file: <path>.events.json
std::filesystem::path events_sidecar(const std::filesystem::path& trial_path);

/// Parses a comma-separated list of doubles ("0.1,0.2", "[0.1, 0.2]");
/// items may be written as fractions ("1/32").
std::vector<double> parse_double_list(std::string_view text);

}  // namespace timelock::io
