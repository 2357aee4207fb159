#include "dimwit/rng.hpp"

#include "dimwit/errors.hpp"

namespace dimwit {

Ket random_ket(int dimension, Rng& rng, bool real_only) {
  if (dimension < 1) throw RangeError("random_ket: dimension must be at least 1");
  Ket psi(dimension);
  double norm = 0.0;
  do {
    for (int a = 0; a < dimension; ++a) {
      psi(a) = real_only ? Complex(rng.gaussian(), 0.0) : rng.complex_gaussian();
    }
    norm = psi.norm();
  } while (norm < 1e-8);
  return psi / norm;
}

Matrix random_unitary(int dimension, Rng& rng, bool real_only) {
  if (dimension < 1) throw RangeError("random_unitary: dimension must be at least 1");
  Matrix gaussian(dimension, dimension);
  for (int a = 0; a < dimension; ++a) {
    for (int b = 0; b < dimension; ++b) {
      gaussian(a, b) = real_only ? Complex(rng.gaussian(), 0.0) : rng.complex_gaussian();
    }
  }
  Eigen::HouseholderQR<Matrix> qr(gaussian);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int a = 0; a < dimension; ++a) {
    const Complex diag = r(a, a);
    const double magnitude = std::abs(diag);
    if (magnitude > 1e-14) q.col(a) *= diag / magnitude;
  }
  return q;
}

}  // namespace dimwit
