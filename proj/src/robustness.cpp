#include "dimwit/robustness.hpp"

#include <cmath>
#include <cstdio>

namespace dimwit {

namespace {

void require_dimension(int d, const char* who) {
  if (d < 2) throw RangeError(std::string(who) + ": dimension must be at least 2");
}

}  // namespace

double eta_qc(int d, double i_star) {
  require_dimension(d, "eta_qc");
  if (!(i_star > 0.0)) throw RangeError("eta_qc: i_star must be positive");
  return static_cast<double>(d - 1) / i_star;
}

double eta_dim(int d, double i_star) {
  require_dimension(d, "eta_dim");
  if (!(i_star > 0.0)) throw RangeError("eta_dim: i_star must be positive");
  return i_star / static_cast<double>(d);
}

double eta_qc_lower_bound(int d) {
  require_dimension(d, "eta_qc_lower_bound");
  return static_cast<double>(d - 1) / static_cast<double>(d);
}

double eta_qc_upper_bound(int d) {
  require_dimension(d, "eta_qc_upper_bound");
  return static_cast<double>(d - 1) / (static_cast<double>(d) - 2.0 + std::sqrt(2.0));
}

double eta_dim_lower_bound(int d) {
  require_dimension(d, "eta_dim_lower_bound");
  return 1.0 - (2.0 - std::sqrt(2.0)) / static_cast<double>(d);
}

ThresholdReport threshold_report(int d, const OptimizerConfig& config,
                                 Algorithm algorithm) {
  require_dimension(d, "threshold_report");
  const WitnessCoefficients witness = build_I_witness(d);
  OptimizationResult optimum;
  try {
    optimum = multi_restart(algorithm, witness, config);
  } catch (const std::exception& e) {
    throw NumericError("threshold_report: optimization failed at d=" +
                       std::to_string(d) + ": " + e.what());
  }

  const auto [sandwich_low, sandwich_high] = bound_sandwich(d);
  if (optimum.value < sandwich_low - 1e-6 || optimum.value > sandwich_high + 1e-6) {
    throw NumericError("threshold_report: optimized value " +
                       std::to_string(optimum.value) + " at d=" + std::to_string(d) +
                       " falls outside the certified bracket; increase restarts");
  }

  ThresholdReport report;
  report.d = d;
  report.i_star = optimum.value;
  report.eta_qc = eta_qc(d, optimum.value);
  report.eta_qc_lower = eta_qc_lower_bound(d);
  report.eta_qc_upper = eta_qc_upper_bound(d);
  report.eta_dim = eta_dim(d, optimum.value);
  report.eta_dim_lower = eta_dim_lower_bound(d);
  return report;
}

std::vector<ThresholdReport> threshold_sweep(int d_min, int d_max,
                                             const OptimizerConfig& config,
                                             Algorithm algorithm) {
  if (d_min < 2 || d_min > d_max) {
    throw RangeError("threshold_sweep: need 2 <= d_min <= d_max");
  }
  std::vector<ThresholdReport> reports;
  reports.reserve(d_max - d_min + 1);
  for (int d = d_min; d <= d_max; ++d) {
    reports.push_back(threshold_report(d, config, algorithm));
  }
  return reports;
}

std::string thresholds_to_csv(const std::vector<ThresholdReport>& reports) {
  std::string csv = "d,i_star,eta_qc,eta_qc_lower,eta_qc_upper,eta_dim,eta_dim_lower\n";
  char row[256];
  for (const ThresholdReport& report : reports) {
    std::snprintf(row, sizeof(row), "%d,%.9f,%.9f,%.9f,%.9f,%.9f,%.9f\n", report.d,
                  report.i_star, report.eta_qc, report.eta_qc_lower,
                  report.eta_qc_upper, report.eta_dim, report.eta_dim_lower);
    csv += row;
  }
  return csv;
}

}  // namespace dimwit
