#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace oracle {

/// Minimum over every monotone path from (0,0) to (n-1,m-1) built from the
/// three unit steps, of the summed squared differences. Exhaustive.
inline double brute_force_dtw_cost(std::span<const double> x, std::span<const double> y) {
  double best = std::numeric_limits<double>::infinity();
  const auto walk = [&](auto&& self, std::size_t i, std::size_t j, double acc) -> void {
    acc += (x[i] - y[j]) * (x[i] - y[j]);
    if (acc >= best) return;
    if (i + 1 == x.size() && j + 1 == y.size()) {
      best = acc;
      return;
    }
    if (i + 1 < x.size() && j + 1 < y.size()) self(self, i + 1, j + 1, acc);
    if (i + 1 < x.size()) self(self, i + 1, j, acc);
    if (j + 1 < y.size()) self(self, i, j + 1, acc);
  };
  walk(walk, 0, 0, 0.0);
  return best;
}

/// Enumerates every monotone path (no pruning) and returns how many exist
/// together with the minimum cost; used for small cases.
struct Enumeration {
  std::uint64_t paths = 0;
  double min_cost = std::numeric_limits<double>::infinity();
};

inline Enumeration enumerate_dtw_paths(std::span<const double> x, std::span<const double> y) {
  Enumeration e;
  const auto walk = [&](auto&& self, std::size_t i, std::size_t j, double acc) -> void {
    acc += (x[i] - y[j]) * (x[i] - y[j]);
    if (i + 1 == x.size() && j + 1 == y.size()) {
      ++e.paths;
      e.min_cost = std::min(e.min_cost, acc);
      return;
    }
    if (i + 1 < x.size() && j + 1 < y.size()) self(self, i + 1, j + 1, acc);
    if (i + 1 < x.size()) self(self, i + 1, j, acc);
    if (j + 1 < y.size()) self(self, i, j + 1, acc);
  };
  walk(walk, 0, 0, 0.0);
  return e;
}

/// Pearson r from the raw-moment closed form (n*sum(xy) - sum x sum y) / ...
inline double pearson_closed_form(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

inline double sine(double freq_hz, double t_s, double phase = 0.0) {
  return std::sin(2.0 * std::numbers::pi * freq_hz * t_s + phase);
}

inline std::vector<double> random_signal(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                         double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace oracle
