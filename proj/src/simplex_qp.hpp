// SPDX-License-Identifier: Apache-2.0
//
// Exact active-set solver for the bundle master problem
//     min  1/2 lambda' Q lambda + a' lambda
//     s.t. lambda >= 0, sum(lambda) = 1
// with Q positive semidefinite.

#ifndef EXTDISC_SIMPLEX_QP_HPP
#define EXTDISC_SIMPLEX_QP_HPP

#include <Eigen/Dense>

namespace extdisc {

struct SimplexQpResult {
  Eigen::VectorXd lambda;
  bool converged = false;
  int iterations = 0;
};

SimplexQpResult solve_simplex_qp(const Eigen::MatrixXd& Q,
                                 const Eigen::VectorXd& a,
                                 const Eigen::VectorXd* warm_start = nullptr);

}  // namespace extdisc

#endif
