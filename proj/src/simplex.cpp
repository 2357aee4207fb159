#include "dimwit/simplex.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace dimwit {

namespace {

constexpr double pivot_epsilon = 1e-10;

}  // namespace

FeasibilityResult phase1_feasible(const RealMatrix& a, const RealVector& b, double tol) {
  const int rows = static_cast<int>(a.rows());
  const int structural = static_cast<int>(a.cols());
  if (b.size() != rows) {
    throw ValidationError("phase1_feasible: rhs length does not match row count");
  }
  if (rows == 0 || structural == 0) {
    throw ValidationError("phase1_feasible: empty system");
  }

  // Tableau [A | I] with rows flipped so the rhs is nonnegative; the
  // artificial variables start as the basis.
  const int total = structural + rows;
  RealMatrix tableau(rows, total);
  RealVector rhs = b;
  tableau.leftCols(structural) = a;
  for (int r = 0; r < rows; ++r) {
    if (rhs(r) < 0.0) {
      tableau.row(r).head(structural) *= -1.0;
      rhs(r) = -rhs(r);
    }
  }
  tableau.rightCols(rows).setIdentity();

  std::vector<int> basis(rows);
  std::iota(basis.begin(), basis.end(), structural);

  // Reduced costs for minimizing the artificial sum: d_j = c_j - sum_r T(r, j).
  RealVector reduced(total);
  for (int j = 0; j < total; ++j) {
    reduced(j) = (j < structural ? 0.0 : 1.0) - tableau.col(j).sum();
  }

  const long max_pivots = 1000L + 50L * total;
  int pivots = 0;
  while (true) {
    int enter = -1;
    for (int j = 0; j < total; ++j) {
      if (reduced(j) < -pivot_epsilon) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < rows; ++r) {
      const double coef = tableau(r, enter);
      if (coef <= pivot_epsilon) continue;
      const double ratio = rhs(r) / coef;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      throw NumericError("phase1_feasible: unbounded pivot column in phase 1");
    }
    if (++pivots > max_pivots) {
      throw NumericError("phase1_feasible: pivot limit exceeded");
    }

    const double pivot = tableau(leave, enter);
    tableau.row(leave) /= pivot;
    rhs(leave) /= pivot;
    for (int r = 0; r < rows; ++r) {
      if (r == leave) continue;
      const double factor = tableau(r, enter);
      if (factor == 0.0) continue;
      tableau.row(r) -= factor * tableau.row(leave);
      rhs(r) -= factor * rhs(leave);
      if (rhs(r) < 0.0 && rhs(r) > -1e-11) rhs(r) = 0.0;
    }
    const double cost_factor = reduced(enter);
    reduced -= cost_factor * tableau.row(leave).transpose();
    basis[leave] = enter;
  }

  double artificial_sum = 0.0;
  RealVector x = RealVector::Zero(structural);
  for (int r = 0; r < rows; ++r) {
    if (basis[r] < structural) {
      x(basis[r]) = rhs(r);
    } else {
      artificial_sum += rhs(r);
    }
  }

  FeasibilityResult result;
  result.feasible = artificial_sum <= tol;
  result.solution = x;
  result.max_violation = (a * x - b).cwiseAbs().maxCoeff();
  result.pivots = pivots;
  return result;
}

}  // namespace dimwit
