#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "rgg/schedule.hpp"
#include "rgg/theory.hpp"

using namespace rgg;

namespace {
constexpr double kE = 2.718281828459045235;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("growth_scale closed-form points") {
  // n = e^2, nrd = 2/e: denominator ln(e) = 1
  const auto n1 = static_cast<std::size_t>(std::round(std::exp(2.0)));  // 7
  CHECK(growth_scale(n1, 2.0 / kE) ==
        doctest::Approx(std::log(7.0) / std::log(std::log(7.0) * kE / 2.0)).epsilon(1e-12));
  // with exactly matched inputs the value is forced to 2
  const double ln_n = 2.0;
  const double nrd = ln_n / kE;
  CHECK(ln_n / std::log(ln_n / nrd) == doctest::Approx(2.0).epsilon(1e-12));

  // n = e^4, nrd = 4/e^2 gives 4/2
  const auto n2 = static_cast<std::size_t>(std::round(std::exp(4.0)));  // 55
  const double v = growth_scale(n2, 4.0 / std::exp(2.0));
  CHECK(v == doctest::Approx(std::log(55.0) / std::log(std::log(55.0) * std::exp(2.0) / 4.0))
                 .epsilon(1e-12));
  CHECK(v == doctest::Approx(2.0).epsilon(2e-2));
}

TEST_CASE("growth_scale domain errors") {
  CHECK_THROWS_AS(growth_scale(100, std::log(100.0)), std::domain_error);  // boundary
  CHECK_THROWS_AS(growth_scale(100, 10.0), std::domain_error);
  CHECK_THROWS_AS(growth_scale(2, 0.1), std::domain_error);
  CHECK_THROWS_AS(growth_scale(100, 0.0), std::domain_error);
}

TEST_CASE("rate_function fixtures") {
  CHECK(rate_function(1.0) == 0.0);
  CHECK(rate_function(kE) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rate_function(kE * kE) == doctest::Approx(kE * kE + 1.0).epsilon(1e-14));
  CHECK_THROWS_AS(rate_function(0.0), std::domain_error);
  CHECK_THROWS_AS(rate_function(-1.0), std::domain_error);
}

TEST_CASE("rate_function is convex with minimum at 1") {
  double prev = rate_function(1.0);
  for (double x = 1.1; x < 50.0; x *= 1.3) {
    const double cur = rate_function(x);
    CHECK(cur > prev);
    prev = cur;
  }
  // below 1 it rises again toward 1 at x -> 0
  CHECK(rate_function(0.5) > 0.0);
  CHECK(rate_function(1.0 + 1e-9) < 1e-15);
}

TEST_CASE("rate_function_inverse_upper fixtures") {
  CHECK(rate_function_inverse_upper(0.0) == 1.0);
  CHECK(rate_function_inverse_upper(1.0) == doctest::Approx(kE).epsilon(1e-11));
  CHECK(rate_function_inverse_upper(kE * kE + 1.0) == doctest::Approx(kE * kE).epsilon(1e-11));
  CHECK_THROWS_AS(rate_function_inverse_upper(-0.1), std::domain_error);
}

TEST_CASE("inverse composed with the rate function is the identity") {
  for (double y = 1.0; y <= 1e6; y *= 2.1544346900318838) {  // ~3 steps/decade
    const double c = rate_function(y);
    const double back = rate_function_inverse_upper(c);
    CHECK(std::abs(back - y) < 1e-10 * std::max(1.0, y));
  }
}

TEST_CASE("tilted_window_mass fixtures") {
  CHECK(tilted_window_mass(1.0, kInf, 1.0) == 1.0);
  CHECK(tilted_window_mass(3.5, kInf, 0.2) == 3.5);
  CHECK(tilted_window_mass(1.0, 1.0, 1.0) == doctest::Approx(kE).epsilon(1e-10));
  CHECK_THROWS_AS(tilted_window_mass(0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(tilted_window_mass(1.0, -2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(tilted_window_mass(1.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("tilted_window_mass sandwich in t") {
  // (t/(t+h)) xi(t) <= xi(t+h) <= xi(t) over a 20x20 grid
  for (int i = 0; i < 20; ++i) {
    const double t = 0.001 * std::pow(10.0, 6.0 * i / 19.0);
    const double xi_t = tilted_window_mass(1.0, t, 1.0);
    for (int j = 0; j < 20; ++j) {
      const double h = 0.001 * std::pow(10.0, 6.0 * j / 19.0);
      const double xi_th = tilted_window_mass(1.0, t + h, 1.0);
      CHECK(xi_th <= xi_t * (1.0 + 1e-12));
      CHECK(xi_th >= (t / (t + h)) * xi_t * (1.0 - 1e-12));
    }
  }
}

TEST_CASE("tilted_window_mass is nonincreasing in t with limit volume") {
  double prev = std::numeric_limits<double>::max();
  for (double t = 1e-4; t <= 1e8; t *= 10.0) {
    const double xi = tilted_window_mass(2.0, t, 0.5);
    CHECK(xi <= prev);
    CHECK(xi >= 2.0);  // never below the untilted volume
    prev = xi;
  }
  CHECK(prev == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("predicted_power_ratio fixtures and bounds") {
  for (double t : {0.01, 1.0, 100.0}) CHECK(predicted_power_ratio(1, 2, t, 1.0, 1.0) == 1.0);

  // t -> infinity pushes the ratio to 1
  CHECK(std::abs(predicted_power_ratio(2, 2, 1e6, 1.0, 1.0) - 1.0) < 1e-3);

  for (int l = 1; l <= 3; ++l) {
    for (int d = 1; d <= 3; ++d) {
      const double floor_ratio = std::pow(static_cast<double>(l), -d);
      for (double t = 1e-4; t <= 1e6; t *= 10.0) {
        const double c = predicted_power_ratio(l, d, t, 1.0, 1.0);
        CHECK(c >= floor_ratio * (1.0 - 1e-12));
        CHECK(c <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("predicted_power_ratio rises monotonically from l^-d toward 1") {
  const int l = 2, d = 2;
  double prev = 0.0;
  for (double t = 1e-6; t <= 1e8; t *= 10.0) {
    const double c = predicted_power_ratio(l, d, t, 1.0, 1.0);
    CHECK(c >= prev);
    prev = c;
  }
  CHECK(prev > 0.999);
  CHECK(predicted_power_ratio(l, d, 1e-9, 1.0, 1.0) < 0.26);  // approaches 1/4
}

TEST_CASE("growth scale diverges along the sub schedule") {
  const RadiusSchedule sub = RadiusSchedule::sub(0.5);
  double prev = 0.0;
  for (std::size_t n = 100; n <= 100'000'000; n *= 10) {
    const double k = growth_scale(n, sub.target_nrd(n));
    CHECK(k > prev);
    prev = k;
  }
  CHECK(prev > 8.0);
}

TEST_CASE("theory_table spans the grid and stays consistent") {
  const auto rows = theory_table(2, 2, 1.0, 1.0, 0.01, 100.0, 9);
  REQUIRE(rows.size() == 9);
  CHECK(rows.front().t == doctest::Approx(0.01));
  CHECK(rows.back().t == doctest::Approx(100.0));
  for (const auto& row : rows) {
    CHECK(row.xi == doctest::Approx(tilted_window_mass(1.0, row.t, 1.0)));
    CHECK(row.c_ratio == doctest::Approx(predicted_power_ratio(2, 2, row.t, 1.0, 1.0)));
  }
  CHECK_THROWS_AS(theory_table(2, 2, 1.0, 1.0, -1.0, 10.0, 5), std::domain_error);
  CHECK_THROWS_AS(theory_table(2, 2, 1.0, 1.0, 1.0, 10.0, 1), std::domain_error);
}
