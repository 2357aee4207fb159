#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dimwit/robustness.hpp"
#include "test_helpers.hpp"

using namespace dimwit;

TEST_CASE("threshold formulas at the known qubit optimum") {
  const double root2 = std::sqrt(2.0);
  CHECK(eta_qc(2, root2) == doctest::Approx(1.0 / root2).epsilon(1e-12));
  CHECK(eta_dim(2, root2) == doctest::Approx(1.0 / root2).epsilon(1e-12));
  // the analytic bracket is tight on both sides at d=2
  CHECK(eta_qc_upper_bound(2) == doctest::Approx(1.0 / root2).epsilon(1e-15));
  CHECK(eta_dim_lower_bound(2) == doctest::Approx(1.0 / root2).epsilon(1e-15));
  CHECK(eta_qc_lower_bound(2) == 0.5);
}

TEST_CASE("bracket endpoints for higher dimensions") {
  CHECK(eta_qc_lower_bound(8) == doctest::Approx(7.0 / 8.0));
  CHECK(eta_qc_upper_bound(8) == doctest::Approx(7.0 / (6.0 + std::sqrt(2.0))));
  CHECK(eta_dim_lower_bound(4) == doctest::Approx(0.8535533906).epsilon(1e-9));
}

TEST_CASE("threshold formulas reject bad inputs") {
  CHECK_THROWS_AS(eta_qc(1, 1.0), RangeError);
  CHECK_THROWS_AS(eta_qc(2, 0.0), RangeError);
  CHECK_THROWS_AS(eta_dim(2, -1.0), RangeError);
  CHECK_THROWS_AS(eta_qc_lower_bound(1), RangeError);
  CHECK_THROWS_AS(threshold_sweep(3, 2, OptimizerConfig{}), RangeError);
  CHECK_THROWS_AS(threshold_sweep(1, 2, OptimizerConfig{}), RangeError);
}

TEST_CASE("a single-dimension sweep reproduces the qubit threshold") {
  OptimizerConfig config;
  config.restarts = 16;
  const std::vector<ThresholdReport> reports = threshold_sweep(2, 2, config);
  REQUIRE(reports.size() == 1);
  const ThresholdReport& report = reports.front();
  CHECK(report.d == 2);
  CHECK(std::abs(report.eta_qc - 0.70710678) <= 1e-6);
  CHECK(std::abs(report.eta_dim - 0.70710678) <= 1e-6);
}

TEST_CASE("sweeps are ordered, bracketed, and monotone") {
  OptimizerConfig config;
  config.restarts = 16;
  const std::vector<ThresholdReport> reports = threshold_sweep(2, 5, config);
  REQUIRE(reports.size() == 4);
  for (std::size_t n = 0; n < reports.size(); ++n) {
    const ThresholdReport& report = reports[n];
    CHECK(report.d == 2 + static_cast<int>(n));
    const auto [low, high] = bound_sandwich(report.d);
    CHECK(report.i_star >= low - 1e-6);
    CHECK(report.i_star <= high + 1e-6);
    CHECK(report.eta_qc >= report.eta_qc_lower - 1e-9);
    CHECK(report.eta_qc <= report.eta_qc_upper + 1e-9);
    CHECK(report.eta_dim >= report.eta_dim_lower - 1e-9);
    CHECK(report.eta_dim <= 1.0 + 1e-9);
    CHECK(report.eta_qc <= report.eta_dim + 1e-9);
    if (n > 0) {
      CHECK(report.eta_qc > reports[n - 1].eta_qc);
      CHECK(report.eta_dim > reports[n - 1].eta_dim);
    }
  }
}

TEST_CASE("csv output carries the exact header and nine decimals") {
  std::vector<ThresholdReport> reports(1);
  reports[0] = ThresholdReport{2, std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.5,
                               1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0),
                               1.0 / std::sqrt(2.0)};
  const std::string csv = thresholds_to_csv(reports);
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "d,i_star,eta_qc,eta_qc_lower,eta_qc_upper,eta_dim,eta_dim_lower");
  CHECK(row == "2,1.414213562,0.707106781,0.500000000,0.707106781,0.707106781,0.707106781");
}

TEST_CASE("the general algorithm can back the sweep as a cross-check") {
  OptimizerConfig config;
  config.restarts = 8;
  const ThresholdReport report = threshold_report(2, config, Algorithm::general);
  CHECK(std::abs(report.eta_qc - 0.70710678) <= 1e-6);
}
