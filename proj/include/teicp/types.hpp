#pragma once

#include <Eigen/Core>

namespace teicp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

}  // namespace teicp
