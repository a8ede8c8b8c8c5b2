#pragma once

#include <Eigen/Dense>

namespace lelong::detail {

struct NnlsResult {
  Eigen::VectorXd x;
  double residual = 0.0;
};

/// Lawson-Hanson active-set solver for min |Ax - b| subject to x >= 0.
NnlsResult nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

}  // namespace lelong::detail
