#include "timelock/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "timelock/error.hpp"

namespace timelock {

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(x.size()) + " vs " + std::to_string(y.size()) + " samples");
  if (x.size() < 2) throw Error(ErrorCode::LengthMismatch, "need at least 2 samples");

  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error(ErrorCode::ZeroVariance, "constant input");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double dtw_reference_distance(std::span<const double> x, std::size_t m) {
  if (x.empty() || m == 0) throw Error(ErrorCode::EmptyInput, "empty sequence");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  double worst = 0.0;
  for (const double c : {*lo, *hi}) {
    double sum = 0.0;
    double cheapest = std::numeric_limits<double>::infinity();
    for (const double v : x) {
      const double d = (v - c) * (v - c);
      sum += d;
      cheapest = std::min(cheapest, d);
    }
    if (m > x.size()) sum += static_cast<double>(m - x.size()) * cheapest;
    worst = std::max(worst, sum);
  }
  return std::sqrt(worst);
}

DtwResult dtw(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) throw Error(ErrorCode::EmptyInput, "DTW needs nonempty inputs");
  const std::size_t n = x.size();
  const std::size_t m = y.size();

  DtwResult res;
  res.cost_matrix = Matrix(n, m);
  Matrix& acc = res.cost_matrix;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = (x[i] - y[j]) * (x[i] - y[j]);
      double best;
      if (i == 0 && j == 0)
        best = 0.0;
      else if (i == 0)
        best = acc(0, j - 1);
      else if (j == 0)
        best = acc(i - 1, 0);
      else
        best = std::min({acc(i - 1, j - 1), acc(i - 1, j), acc(i, j - 1)});
      acc(i, j) = d + best;
    }
  }

  std::size_t i = n - 1, j = m - 1;
  res.path.emplace_back(i, j);
  while (i > 0 || j > 0) {
    if (i == 0) {
      --j;
    } else if (j == 0) {
      --i;
    } else {
      const double diag = acc(i - 1, j - 1);
      const double up = acc(i - 1, j);
      const double left = acc(i, j - 1);
      if (diag <= up && diag <= left) {
        --i;
        --j;
      } else if (up <= left) {
        --i;
      } else {
        --j;
      }
    }
    res.path.emplace_back(i, j);
  }
  std::reverse(res.path.begin(), res.path.end());

  res.distance = std::sqrt(acc(n - 1, m - 1));
  const double ref = dtw_reference_distance(x, m);
  if (ref > 0.0)
    res.normalized_distance = std::clamp(res.distance / ref, 0.0, 1.0);
  else
    res.normalized_distance = res.distance > 0.0 ? 1.0 : 0.0;
  return res;
}

double energy(std::span<const double> x) {
  if (x.empty()) throw Error(ErrorCode::EmptyInput, "energy of an empty signal");
  return std::transform_reduce(x.begin(), x.end(), 0.0, std::plus<>{},
                               [](double v) { return v * v; });
}

double power(std::span<const double> x, double f_samp) {
  if (x.empty()) throw Error(ErrorCode::EmptyInput, "power of an empty signal");
  if (!(f_samp > 0.0)) throw Error(ErrorCode::BadRate, "f_samp must be positive");
  return energy(x) / f_samp;
}

}  // namespace timelock
