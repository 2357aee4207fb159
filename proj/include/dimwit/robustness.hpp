#pragma once

#include <string>
#include <vector>

#include "dimwit/optimizer.hpp"

namespace dimwit {

// Per-dimension detection-efficiency thresholds together with their analytic
// brackets. i_star is a numerical lower bound on the true optimum, so eta_qc
// is an upper estimate of the true threshold and eta_dim a lower one; the
// bracket columns carry the certified interval.
struct ThresholdReport {
  int d = 2;
  double i_star = 0.0;
  double eta_qc = 0.0;
  double eta_qc_lower = 0.0;
  double eta_qc_upper = 0.0;
  double eta_dim = 0.0;
  double eta_dim_lower = 0.0;
};

// Minimum efficiency at which the witness still separates quantum from
// classical d-dimensional sources: (d-1) / i_star.
double eta_qc(int d, double i_star);

// Minimum efficiency at which the witness still certifies dimension above d:
// i_star / d.
double eta_dim(int d, double i_star);

double eta_qc_lower_bound(int d);   // (d-1) / d
double eta_qc_upper_bound(int d);   // (d-1) / (d - 2 + sqrt(2))
double eta_dim_lower_bound(int d);  // 1 - (2 - sqrt(2)) / d

ThresholdReport threshold_report(int d, const OptimizerConfig& config,
                                 Algorithm algorithm = Algorithm::rank1);

std::vector<ThresholdReport> threshold_sweep(int d_min, int d_max,
                                             const OptimizerConfig& config,
                                             Algorithm algorithm = Algorithm::rank1);

// Exact header `d,i_star,eta_qc,eta_qc_lower,eta_qc_upper,eta_dim,eta_dim_lower`,
// one row per dimension, nine decimal digits.
std::string thresholds_to_csv(const std::vector<ThresholdReport>& reports);

}  // namespace dimwit
