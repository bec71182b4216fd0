// SPDX-License-Identifier: Apache-2.0
//
// Small dense linear programming. Only desk-scale instances appear here
// (support functions of realified polyhedral bodies), so a tableau simplex
// with Bland's rule is plenty.

#ifndef EXTDISC_LP_HPP
#define EXTDISC_LP_HPP

#include <Eigen/Dense>

namespace extdisc {

enum class LpStatus { Optimal, Infeasible, Unbounded, Stalled };

struct StandardLpResult {
  LpStatus status = LpStatus::Stalled;
  double value = 0.0;
  Eigen::VectorXd x;      // solution of the standard-form problem
  Eigen::VectorXd duals;  // row multipliers at the final basis
};

// min c'x  s.t.  Ax = b, x >= 0.
StandardLpResult solve_standard_lp(const Eigen::MatrixXd& A,
                                   const Eigen::VectorXd& b,
                                   const Eigen::VectorXd& c);

struct SupportResult {
  double value = 0.0;
  Eigen::VectorXd maximizer;  // point of {Ax <= b} attaining the value
  bool bounded = false;
};

// max c'x over the polytope {x : Ax <= b} with b > 0 (origin interior).
// bounded=false signals an unbounded direction (the polyhedron is not a body).
SupportResult polytope_support(const Eigen::MatrixXd& A,
                               const Eigen::VectorXd& b,
                               const Eigen::VectorXd& c);

}  // namespace extdisc

#endif
