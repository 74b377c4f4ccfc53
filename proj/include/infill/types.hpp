#pragma once

#include <Eigen/Dense>

namespace infill {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

}  // namespace infill
