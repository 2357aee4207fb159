#include "dimwit/core_math.hpp"

#include <cmath>
#include <string>

namespace dimwit {

namespace {

void require_hermitian(const Matrix& h, const char* who) {
  if (h.rows() < 1 || h.rows() != h.cols()) {
    throw ValidationError(std::string(who) + ": matrix must be square and non-empty");
  }
  const double defect = hermiticity_defect(h);
  if (defect > hermiticity_tolerance) {
    throw ValidationError(std::string(who) + ": matrix is not Hermitian (defect " +
                          std::to_string(defect) + ")");
  }
}

}  // namespace

Spectrum eigh(const Matrix& h) {
  require_hermitian(h, "eigh");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigh: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const Matrix& h) {
  require_hermitian(h, "min_eigenvalue");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("min_eigenvalue: eigensolver did not converge");
  }
  return solver.eigenvalues()(0);
}

Matrix matrix_power(const Matrix& h, double exponent) {
  if (exponent != 0.5 && exponent != -0.5) {
    throw RangeError("matrix_power: exponent must be +1/2 or -1/2");
  }
  Spectrum spectrum = eigh(h);
  RealVector w = spectrum.eigenvalues;
  for (Eigen::Index a = 0; a < w.size(); ++a) {
    if (w(a) < -psd_tolerance) {
      throw PositivityError("matrix_power: eigenvalue " + std::to_string(w(a)) +
                            " below PSD tolerance");
    }
    if (w(a) < 0.0) w(a) = 0.0;
    if (exponent < 0.0 && w(a) < inv_sqrt_floor) w(a) = inv_sqrt_floor;
    w(a) = exponent > 0.0 ? std::sqrt(w(a)) : 1.0 / std::sqrt(w(a));
  }
  return hermitian_part(spectrum.eigenvectors * w.asDiagonal() * spectrum.eigenvectors.adjoint());
}

Matrix matrix_sqrt(const Matrix& h) { return matrix_power(h, 0.5); }

Matrix matrix_inv_sqrt(const Matrix& h) { return matrix_power(h, -0.5); }

}  // namespace dimwit
