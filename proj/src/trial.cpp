#include "timelock/trial.hpp"

#include <cmath>
#include <optional>

#include "timelock/error.hpp"

namespace timelock {

Trial validate_trial(Trial t) {
  if (t.samples.empty()) throw Error(ErrorCode::EmptySignal, "trial has no samples");
  for (std::size_t i = 0; i < t.samples.size(); ++i) {
    if (!std::isfinite(t.samples[i]))
      throw Error(ErrorCode::NonFinite, "sample " + std::to_string(i) + " is not finite");
  }
  if (!(t.f_samp > 0.0) || !std::isfinite(t.f_samp))
    throw Error(ErrorCode::BadRate, "f_samp must be positive, got " + std::to_string(t.f_samp));
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    const auto& ev = t.events[i];
    if (ev.index >= t.samples.size())
      throw Error(ErrorCode::BadEvents, "event '" + ev.label + "' at " +
                                            std::to_string(ev.index) + " outside signal of length " +
                                            std::to_string(t.samples.size()));
    if (i > 0 && ev.index <= t.events[i - 1].index)
      throw Error(ErrorCode::BadEvents, "event indices must be strictly increasing (" +
                                            std::to_string(t.events[i - 1].index) + " then " +
                                            std::to_string(ev.index) + ")");
  }
  return t;
}

std::size_t index_from_seconds(double seconds, double f_samp) {
  if (!(f_samp > 0.0)) throw Error(ErrorCode::BadRate, "f_samp must be positive");
  const double pos = seconds * f_samp;
  if (!std::isfinite(pos) || pos < 0.0)
    throw Error(ErrorCode::BadEvents, "event time must be finite and non-negative");
  return static_cast<std::size_t>(std::ceil(pos - 0.5));
}

Partition make_partition(std::size_t len, std::size_t onset, std::size_t transition,
                         std::size_t offset) {
  if (offset > len)
    throw Error(ErrorCode::RangeOutOfBounds,
                "offset " + std::to_string(offset) + " beyond length " + std::to_string(len));
  if (!(onset < transition))
    throw Error(ErrorCode::DegenerateInterval, "t1 is empty (onset " + std::to_string(onset) +
                                                   ", transition " + std::to_string(transition) +
                                                   ")");
  if (!(transition < offset))
    throw Error(ErrorCode::DegenerateInterval, "t2 is empty (transition " +
                                                   std::to_string(transition) + ", offset " +
                                                   std::to_string(offset) + ")");
  return Partition{{0, onset}, {onset, transition}, {transition, offset}, {offset, len}};
}

namespace {

std::size_t find_unique(const Trial& t, std::string_view label) {
  std::optional<std::size_t> found;
  for (const auto& ev : t.events) {
    if (ev.label != label) continue;
    if (found) throw Error(ErrorCode::DuplicateEvent, "more than one '" + std::string(label) + "' marker");
    found = ev.index;
  }
  if (!found) throw Error(ErrorCode::MissingEvent, "no '" + std::string(label) + "' marker");
  return *found;
}

}  // namespace

Partition partition_from_events(const Trial& t, std::string_view onset_label,
                                std::string_view transition_label, std::string_view offset_label) {
  const auto onset = find_unique(t, onset_label);
  const auto transition = find_unique(t, transition_label);
  const auto offset = find_unique(t, offset_label);
  return make_partition(t.size(), onset, transition, offset);
}

std::vector<EventMarker> partition_events(const Partition& p) {
  std::vector<EventMarker> out{{p.onset(), std::string(kOnset)},
                               {p.transition(), std::string(kTransition)}};
  // An offset at len has no sample to sit on.
  if (p.offset() < p.total()) out.push_back({p.offset(), std::string(kOffset)});
  return out;
}

double IntervalReport::energy_ratio() const noexcept {
  return energy_in > 0.0 ? energy_out * ratio / energy_in : 1.0;
}

}  // namespace timelock
