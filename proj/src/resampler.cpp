#include "timelock/resampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "timelock/error.hpp"

namespace timelock {

void SincConfig::validate() const {
  if (half_width < 4)
    throw Error(ErrorCode::BadConfig, "half_width must be >= 4, got " + std::to_string(half_width));
  if (window == WindowKind::Kaiser && !(std::isfinite(beta) && beta > 0.0))
    throw Error(ErrorCode::BadConfig, "Kaiser beta must be finite and positive");
}

namespace {

// Modified Bessel function I0 by its power series; converges quickly for the
// arguments a Kaiser window uses.
double bessel_i0(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k));
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

double window_shape(const SincConfig& cfg, double a, double kaiser_norm) {
  using std::numbers::pi;
  switch (cfg.window) {
    case WindowKind::Kaiser:
      return bessel_i0(cfg.beta * std::sqrt(1.0 - a * a)) * kaiser_norm;
    case WindowKind::Hann:
      return 0.5 * (1.0 + std::cos(pi * a));
    case WindowKind::Blackman:
      return 0.42 + 0.5 * std::cos(pi * a) + 0.08 * std::cos(2.0 * pi * a);
  }
  return 0.0;
}

double kaiser_norm(const SincConfig& cfg) {
  return cfg.window == WindowKind::Kaiser ? 1.0 / bessel_i0(cfg.beta) : 1.0;
}

}  // namespace

double window_value(const SincConfig& cfg, double u) {
  const double a = std::abs(u);
  if (a > 1.0) return 0.0;
  return window_shape(cfg, a, kaiser_norm(cfg));
}

namespace {

double sinc(double x) {
  if (x == 0.0) return 1.0;
  if (x == std::round(x)) return 0.0;  // sin(pi x) does not round to 0
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

double contraction_cutoff(std::size_t in_len, std::size_t out_len, const SincConfig& cfg) {
  if (!cfg.anti_alias || out_len < 2) return 1.0;
  return std::min(1.0, static_cast<double>(out_len - 1) / static_cast<double>(in_len - 1));
}

std::vector<double> grid_positions(double origin, std::size_t in_len, std::size_t out_len) {
  std::vector<double> pos(out_len, origin);
  if (out_len < 2) return pos;
  const double span = static_cast<double>(in_len - 1);
  const double steps = static_cast<double>(out_len - 1);
  for (std::size_t k = 0; k < out_len; ++k) pos[k] = origin + static_cast<double>(k) * span / steps;
  return pos;
}

void check_lengths(std::size_t in_len, std::size_t out_len) {
  if (in_len < 2)
    throw Error(ErrorCode::SegmentTooShort,
                "segment needs at least 2 samples, got " + std::to_string(in_len));
  if (out_len < 1) throw Error(ErrorCode::BadOutputLength, "out_len must be >= 1");
}

}  // namespace

std::vector<double> interpolate_at(std::span<const double> segment,
                                   std::span<const double> positions, double cutoff,
                                   const SincConfig& cfg) {
  cfg.validate();
  if (segment.empty()) throw Error(ErrorCode::SegmentTooShort, "empty segment");
  if (!(cutoff > 0.0 && cutoff <= 1.0))
    throw Error(ErrorCode::BadConfig, "cutoff must lie in (0, 1]");

  const auto n = static_cast<std::ptrdiff_t>(segment.size());
  const double hw = cfg.half_width;
  const double norm = kaiser_norm(cfg);
  std::vector<double> out(positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const double t = positions[k];
    const auto lo = static_cast<std::ptrdiff_t>(std::ceil(t - hw));
    const auto hi = static_cast<std::ptrdiff_t>(std::floor(t + hw));
    double acc = 0.0;
    double gain = 0.0;
    for (std::ptrdiff_t i = lo; i <= hi; ++i) {
      const double d = static_cast<double>(i) - t;
      const double a = std::abs(d) / hw;
      if (a > 1.0) continue;
      const double w = window_shape(cfg, a, norm) * cutoff * sinc(cutoff * d);
      // Samples past either end hold the edge value.
      acc += w * segment[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, n - 1))];
      gain += w;
    }
    out[k] = acc / gain;
  }
  return out;
}

std::vector<double> resample(std::span<const double> segment, std::size_t out_len,
                             const SincConfig& cfg) {
  check_lengths(segment.size(), out_len);
  const auto pos = grid_positions(0.0, segment.size(), out_len);
  return interpolate_at(segment, pos, contraction_cutoff(segment.size(), out_len, cfg), cfg);
}

std::vector<double> resample_padded(std::span<const double> full, IndexRange range,
                                    std::size_t out_len, std::size_t pad_left,
                                    std::size_t pad_right, const SincConfig& cfg, PadMode mode) {
  if (range.begin > range.end || range.end > full.size())
    throw Error(ErrorCode::RangeOutOfBounds,
                "range [" + std::to_string(range.begin) + ", " + std::to_string(range.end) +
                    ") outside signal of length " + std::to_string(full.size()));
  check_lengths(range.size(), out_len);

  std::vector<double> padded;
  padded.reserve(pad_left + range.size() + pad_right);
  const auto n = static_cast<std::ptrdiff_t>(full.size());
  const auto fetch = [&](std::ptrdiff_t i) {
    if (mode == PadMode::Zero) return 0.0;
    return full[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, n - 1))];
  };
  const auto begin = static_cast<std::ptrdiff_t>(range.begin);
  const auto end = static_cast<std::ptrdiff_t>(range.end);
  for (auto i = begin - static_cast<std::ptrdiff_t>(pad_left); i < begin; ++i)
    padded.push_back(fetch(i));
  padded.insert(padded.end(), full.begin() + begin, full.begin() + end);
  for (auto i = end; i < end + static_cast<std::ptrdiff_t>(pad_right); ++i)
    padded.push_back(fetch(i));

  // Evaluate only on the target interval's grid; the scaled padding never
  // needs to be materialized and then truncated.
  const auto pos = grid_positions(static_cast<double>(pad_left), range.size(), out_len);
  return interpolate_at(padded, pos, contraction_cutoff(range.size(), out_len, cfg), cfg);
}

}  // namespace timelock
