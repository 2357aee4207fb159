#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dimwit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;  // dense complex operators (states, POVM elements)
using Ket = Eigen::VectorXcd;     // pure states and measurement vectors
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

}  // namespace dimwit
