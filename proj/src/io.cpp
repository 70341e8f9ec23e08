#include "timelock/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace timelock::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool parse_number(std::string_view text, double& out) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

std::string located(std::string_view source, std::size_t line, const std::string& msg) {
  return std::string(source) + ":" + std::to_string(line) + ": " + msg;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc{} ? ptr : buf);
}

Trial parse_trial(std::istream& in, std::string_view source) {
  Trial t;
  bool have_rate = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      const auto meta = trim(body.substr(1));
      const auto colon = meta.find(':');
      if (colon == std::string_view::npos) continue;
      if (trim(meta.substr(0, colon)) != "f_samp") continue;
      if (!parse_number(meta.substr(colon + 1), t.f_samp))
        throw ParseError(located(source, lineno, "f_samp is not a number"));
      have_rate = true;
      continue;
    }
    if (body.find(',') != std::string_view::npos)
      throw ParseError(located(source, lineno, "expected one value per row, got '" +
                                                   std::string(body) + "'"));
    double v = 0.0;
    if (!parse_number(body, v))
      throw ParseError(located(source, lineno, "not a number: '" + std::string(body) + "'"));
    t.samples.push_back(v);
  }
  if (!have_rate) throw ParseError(std::string(source) + ": missing '# f_samp: <Hz>' header");
  return validate_trial(std::move(t));
}

Trial read_trial(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_trial(in, path.string());
}

void write_trial(std::ostream& out, const Trial& t, const std::vector<std::string>& extra_metadata) {
  out << "# f_samp: " << format_double(t.f_samp) << '\n';
  for (const auto& m : extra_metadata) out << "# " << m << '\n';
  for (const double v : t.samples) out << format_double(v) << '\n';
}

void write_trial(const std::filesystem::path& path, const Trial& t,
                 const std::vector<std::string>& extra_metadata) {
  auto out = open_out(path);
  write_trial(out, t, extra_metadata);
}

std::vector<EventMarker> parse_events(std::istream& in, std::string_view source) {
  std::vector<EventMarker> events;
  try {
    const auto doc = nlohmann::json::parse(in);
    for (const auto& e : doc.at("events")) {
      const auto idx = e.at("index").get<long long>();
      if (idx < 0) throw ParseError(std::string(source) + ": negative event index");
      events.push_back({static_cast<std::size_t>(idx), e.at("label").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(source) + ": " + e.what());
  }
  return events;
}

std::vector<EventMarker> read_events(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_events(in, path.string());
}

void write_events(const std::filesystem::path& path, const std::vector<EventMarker>& events) {
  nlohmann::json doc;
  doc["events"] = nlohmann::json::array();
  for (const auto& e : events) doc["events"].push_back({{"index", e.index}, {"label", e.label}});
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
}

std::filesystem::path events_sidecar(const std::filesystem::path& trial_path) {
  auto p = trial_path;
  p += ".events.json";
  return p;
}

std::vector<double> parse_double_list(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') text.remove_prefix(1);
  if (!text.empty() && text.back() == ']') text.remove_suffix(1);
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    double v = 0.0;
    const auto slash = item.find('/');
    double den = 1.0;
    const bool ok = slash == std::string_view::npos
                        ? parse_number(item, v)
                        : parse_number(item.substr(0, slash), v) &&
                              parse_number(item.substr(slash + 1), den) && den != 0.0;
    if (!ok) throw ParseError("not a number: '" + std::string(trim(item)) + "'");
    out.push_back(v / den);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace timelock::io
