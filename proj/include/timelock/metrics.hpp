#pragma once

#include <span>

#include "timelock/trial.hpp"

namespace timelock {

/// Pearson product-moment correlation. Throws LengthMismatch (unequal or
/// shorter than 2) or ZeroVariance.
double pearson(std::span<const double> x, std::span<const double> y);

/// Unconstrained DTW with squared-difference local cost and the three unit
/// steps. distance = sqrt(accumulated cost at (n-1, m-1)). The path is
/// recovered by backtracking, preferring the diagonal, then (i-1, j).
///
/// normalized_distance divides distance by dtw_reference_distance(x, |y|)
/// and is clamped to [0, 1].
DtwResult dtw(std::span<const double> x, std::span<const double> y);

/// DTW distance between x and a constant sequence of length m sitting at
/// whichever extreme of x (min or max) is farther from the signal. Closed
/// form: every row is visited at least once and surplus columns are spent
/// on the cheapest row.
double dtw_reference_distance(std::span<const double> x, std::size_t m);

/// Sum of squared samples. Throws EmptyInput.
double energy(std::span<const double> x);

/// energy / f_samp: left Riemann sum of the squared signal over time.
double power(std::span<const double> x, double f_samp);

}  // namespace timelock
