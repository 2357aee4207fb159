#pragma once

#include <Eigen/Dense>

#include "dimwit/errors.hpp"
#include "dimwit/types.hpp"

namespace dimwit {

// Hermiticity accepted by eigh/matrix_power; tighter 1e-12 is the type-level check.
inline constexpr double hermiticity_tolerance = 1e-9;
// Eigenvalues in [-psd_tolerance, 0) are round-off and clamped to zero;
// anything below -psd_tolerance is a genuine positivity failure.
inline constexpr double psd_tolerance = 1e-10;
// Regularization floor for inverse square roots of near-singular normalizers.
inline constexpr double inv_sqrt_floor = 1e-12;

// Eigendecomposition H = V diag(w) V^dagger with w ascending and V unitary.
struct Spectrum {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

// max_{a,b} |H(a,b) - conj(H(b,a))|
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& h) {
  return (h - h.adjoint()).template lpNorm<Eigen::Infinity>();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& h, double tol = 1e-12) {
  return h.rows() == h.cols() && hermiticity_defect(h) <= tol;
}

// (X + X^dagger) / 2, discarding anti-Hermitian round-off.
template <typename Derived>
Matrix hermitian_part(const Eigen::MatrixBase<Derived>& x) {
  return 0.5 * (x + x.adjoint());
}

Spectrum eigh(const Matrix& h);

double min_eigenvalue(const Matrix& h);

// exponent must be +1/2 or -1/2; input must be PSD within psd_tolerance.
Matrix matrix_power(const Matrix& h, double exponent);

Matrix matrix_sqrt(const Matrix& h);
Matrix matrix_inv_sqrt(const Matrix& h);

}  // namespace dimwit
