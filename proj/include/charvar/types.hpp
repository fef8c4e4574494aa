#pragma once

#include <complex>

#include <Eigen/Dense>

namespace charvar {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

} // namespace charvar
