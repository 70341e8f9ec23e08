#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "timelock/metrics.hpp"

using namespace timelock;

namespace {

void check_path_shape(const DtwResult& r, std::size_t n, std::size_t m) {
  REQUIRE_FALSE(r.path.empty());
  CHECK(r.path.front() == PathStep{0, 0});
  CHECK(r.path.back() == PathStep{n - 1, m - 1});
  for (std::size_t k = 1; k < r.path.size(); ++k) {
    const auto di = r.path[k].first - r.path[k - 1].first;
    const auto dj = r.path[k].second - r.path[k - 1].second;
    CHECK(((di == 1 && dj == 0) || (di == 0 && dj == 1) || (di == 1 && dj == 1)));
  }
}

double path_cost(const DtwResult& r, std::span<const double> x, std::span<const double> y) {
  double c = 0.0;
  for (const auto& [i, j] : r.path) c += (x[i] - y[j]) * (x[i] - y[j]);
  return c;
}

}  // namespace

TEST_CASE("pearson examples") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{1, 2, 3, 5};
  CHECK(pearson(x, x) == doctest::Approx(1.0));
  const std::vector<double> neg{-1, -2, -3, -4};
  CHECK(pearson(x, neg) == doctest::Approx(-1.0));
  // Closed form: sxy = 6.5, sxx = 5, syy = 8.75.
  const double expected = 6.5 / std::sqrt(5.0 * 8.75);
  CHECK(expected == doctest::Approx(0.98270762));
  CHECK(pearson(x, y) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(pearson(x, y) == doctest::Approx(oracle::pearson_closed_form(x, y)).epsilon(1e-12));
}

TEST_CASE("pearson errors") {
  const std::vector<double> a{1, 2, 3};
  const std::vector<double> b{1, 2};
  const std::vector<double> flat{2, 2, 2};
  CHECK(error_code([&] { pearson(a, b); }) == ErrorCode::LengthMismatch);
  CHECK(error_code([&] { pearson(std::vector<double>{1}, std::vector<double>{1}); }) ==
        ErrorCode::LengthMismatch);
  CHECK(error_code([&] { pearson(a, flat); }) == ErrorCode::ZeroVariance);
}

TEST_CASE("property: pearson is affine invariant up to sign") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  for (int iter = 0; iter < 200; ++iter) {
    const auto x = oracle::random_signal(rng, 50);
    const auto y = oracle::random_signal(rng, 50);
    double a = coef(rng), c = coef(rng);
    if (std::abs(a) < 0.1) a = 0.5;
    if (std::abs(c) < 0.1) c = -0.5;
    const double b = coef(rng), d = coef(rng);
    std::vector<double> xs(50), ys(50);
    for (std::size_t i = 0; i < 50; ++i) {
      xs[i] = a * x[i] + b;
      ys[i] = c * y[i] + d;
    }
    const double sign = (a * c > 0) ? 1.0 : -1.0;
    CHECK(std::abs(pearson(xs, ys) - sign * pearson(x, y)) <= 1e-12);
  }
}

TEST_CASE("dtw of a sequence with itself") {
  const std::vector<double> x{0.3, -1.0, 2.0, 0.5, 0.5};
  const auto r = dtw(x, x);
  CHECK(r.distance == 0.0);
  CHECK(r.normalized_distance == 0.0);
  CHECK(r.similarity() == 1.0);
  REQUIRE(r.path.size() == x.size());
  for (std::size_t k = 0; k < x.size(); ++k) CHECK(r.path[k] == PathStep{k, k});
}

TEST_CASE("dtw small example: every accumulated cost matches path enumeration") {
  const std::vector<double> x{0, 0, 1, 1};
  const std::vector<double> y{0, 1, 1};
  const auto r = dtw(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const auto e = oracle::enumerate_dtw_paths(std::span<const double>(x).first(i + 1),
                                                 std::span<const double>(y).first(j + 1));
      CHECK(r.cost_matrix(i, j) == e.min_cost);
    }
  }
  // 25 monotone paths reach (3, 2) (Delannoy number D(3,2)).
  CHECK(oracle::enumerate_dtw_paths(x, y).paths == 25);
  CHECK(r.distance == 0.0);
  const std::vector<PathStep> expected{{0, 0}, {1, 0}, {2, 1}, {3, 2}};
  CHECK(r.path == expected);
}

TEST_CASE("property: DP distance equals the exhaustive minimum, paths are valid") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> len(1, 9);
  for (int iter = 0; iter < 150; ++iter) {
    const auto x = oracle::random_signal(rng, len(rng), -2.0, 2.0);
    const auto y = oracle::random_signal(rng, len(rng), -2.0, 2.0);
    const auto r = dtw(x, y);
    const double best = oracle::brute_force_dtw_cost(x, y);
    CHECK(r.cost_matrix(x.size() - 1, y.size() - 1) == doctest::Approx(best).epsilon(1e-12));
    CHECK(r.distance == doctest::Approx(std::sqrt(best)).epsilon(1e-12));
    check_path_shape(r, x.size(), y.size());
    CHECK(path_cost(r, x, y) == doctest::Approx(best).epsilon(1e-12));
    CHECK(r.normalized_distance >= 0.0);
    CHECK(r.normalized_distance <= 1.0);
    CHECK(dtw(y, x).distance == doctest::Approx(r.distance).epsilon(1e-12));
  }
}

TEST_CASE("dtw reference distance matches DTW against the constant extreme") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> len(1, 40);
  for (int iter = 0; iter < 100; ++iter) {
    const auto x = oracle::random_signal(rng, len(rng), -3.0, 1.0);
    const std::size_t m = len(rng);
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    const double via_dtw = std::max(dtw(x, std::vector<double>(m, *lo)).distance,
                                    dtw(x, std::vector<double>(m, *hi)).distance);
    CHECK(dtw_reference_distance(x, m) == doctest::Approx(via_dtw).epsilon(1e-12));
  }
}

TEST_CASE("dtw normalization: constant reference gives the worst case") {
  const std::vector<double> x{0.0, 1.0, 2.0, 1.0};
  const auto r = dtw(x, std::vector<double>(4, 0.0));  // 0 is an extreme of x
  CHECK(r.normalized_distance <= 1.0);
  const auto worst = dtw(x, std::vector<double>(4, 2.0));
  CHECK(worst.normalized_distance == doctest::Approx(1.0));
  // A constant x has no range: identical inputs are 0, anything else is 1.
  const std::vector<double> flat{1.0, 1.0};
  CHECK(dtw(flat, flat).normalized_distance == 0.0);
  CHECK(dtw(flat, std::vector<double>{1.0, 3.0}).normalized_distance == 1.0);
}

TEST_CASE("dtw accepts unequal lengths and rejects empty input") {
  const std::vector<double> a{1, 2, 3, 4, 5};
  const std::vector<double> b{1, 3, 5};
  const auto r = dtw(a, b);
  CHECK(r.cost_matrix.rows() == 5);
  CHECK(r.cost_matrix.cols() == 3);
  CHECK(error_code([&] { dtw(a, std::vector<double>{}); }) == ErrorCode::EmptyInput);
}

TEST_CASE("energy and power") {
  CHECK(energy(std::vector<double>{0, 0, 0}) == 0.0);
  CHECK(energy(std::vector<double>{1, -1, 2}) == 6.0);
  CHECK(power(std::vector<double>{2, 2}, 2.0) == 4.0);
  CHECK(power(std::vector<double>{0, 0, 0}, 100.0) == 0.0);
  CHECK(error_code([] { energy(std::vector<double>{}); }) == ErrorCode::EmptyInput);
  CHECK(error_code([] { power(std::vector<double>{}, 1.0); }) == ErrorCode::EmptyInput);
  CHECK(error_code([] { power(std::vector<double>{1.0}, 0.0); }) == ErrorCode::BadRate);
}

TEST_CASE("energy of a unit sine over whole periods is N/2") {
  // Integral oracle: mean of sin^2 over whole periods is exactly 1/2.
  for (const std::size_t periods : {1u, 3u, 10u}) {
    const std::size_t n = 1000 * periods;
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = std::sin(2.0 * std::numbers::pi * static_cast<double>(periods * i) / n);
    CHECK(std::abs(energy(x) - n / 2.0) <= 1e-6 * n);
  }
}
