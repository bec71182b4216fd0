// SPDX-License-Identifier: Apache-2.0

#include "lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "errors.hpp"

namespace extdisc {

namespace {

constexpr double kPivotTol = 1e-11;

// One simplex phase on the tableau T = [A | b] minimizing cost over the
// current basis. Bland's rule throughout. Returns false on stall.
bool run_simplex(Eigen::MatrixXd& T, std::vector<int>& basis,
                 const Eigen::VectorXd& cost, int n_cols, LpStatus& status) {
  const int m = static_cast<int>(T.rows());
  const int max_pivots = 50 * (n_cols + m) + 200;
  for (int iter = 0; iter < max_pivots; ++iter) {
    // Reduced costs via multipliers: pi solves B' pi = c_B implicitly; with a
    // full tableau the basic columns are unit vectors, so z_j = c_B' T_col.
    Eigen::VectorXd cb(m);
    for (int i = 0; i < m; ++i) cb(i) = cost(basis[i]);
    int entering = -1;
    for (int j = 0; j < n_cols; ++j) {
      double rc = cost(j) - cb.dot(T.col(j));
      if (rc < -kPivotTol) {
        entering = j;  // Bland: first improving index
        break;
      }
    }
    if (entering < 0) {
      status = LpStatus::Optimal;
      return true;
    }
    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      double a = T(i, entering);
      if (a > kPivotTol) {
        double ratio = T(i, n_cols) / a;
        if (ratio < best_ratio - 1e-14 ||
            (ratio < best_ratio + 1e-14 &&
             (leaving < 0 || basis[i] < basis[leaving]))) {
          best_ratio = ratio;
          leaving = i;
        }
      }
    }
    if (leaving < 0) {
      status = LpStatus::Unbounded;
      return true;
    }
    double piv = T(leaving, entering);
    T.row(leaving) /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leaving) continue;
      double f = T(i, entering);
      if (f != 0.0) T.row(i) -= f * T.row(leaving);
    }
    basis[leaving] = entering;
  }
  status = LpStatus::Stalled;
  return false;
}

}  // namespace

StandardLpResult solve_standard_lp(const Eigen::MatrixXd& A,
                                   const Eigen::VectorXd& b,
                                   const Eigen::VectorXd& c) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  StandardLpResult res;

  // Phase 1 with one artificial per row, signs arranged so b >= 0.
  Eigen::MatrixXd T(m, n + m + 1);
  Eigen::VectorXd brow = b;
  Eigen::MatrixXd Arow = A;
  for (int i = 0; i < m; ++i) {
    if (brow(i) < 0) {
      brow(i) = -brow(i);
      Arow.row(i) = -Arow.row(i);
    }
  }
  T.setZero();
  T.block(0, 0, m, n) = Arow;
  T.block(0, n, m, m).setIdentity();
  T.col(n + m) = brow;

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;
  Eigen::VectorXd cost1 = Eigen::VectorXd::Zero(n + m);
  cost1.tail(m).setOnes();

  LpStatus st;
  if (!run_simplex(T, basis, cost1, n + m, st)) {
    res.status = LpStatus::Stalled;
    return res;
  }
  double phase1 = 0.0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n) phase1 += T(i, n + m);
  if (st == LpStatus::Unbounded || phase1 > 1e-8) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  // Pivot residual artificials out of the basis where possible.
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(T(i, j)) > 1e-9) {
        enter = j;
        break;
      }
    }
    if (enter < 0) continue;  // redundant row, keep the (zero) artificial
    double piv = T(i, enter);
    T.row(i) /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == i) continue;
      double f = T(r, enter);
      if (f != 0.0) T.row(r) -= f * T.row(i);
    }
    basis[i] = enter;
  }

  Eigen::VectorXd cost2 = Eigen::VectorXd::Zero(n + m);
  cost2.head(n) = c;
  // Large penalty keeps any stuck artificial at zero.
  cost2.tail(m).setConstant(1e12);
  if (!run_simplex(T, basis, cost2, n + m, st)) {
    res.status = LpStatus::Stalled;
    return res;
  }
  if (st == LpStatus::Unbounded) {
    res.status = LpStatus::Unbounded;
    return res;
  }

  res.status = LpStatus::Optimal;
  res.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) res.x(basis[i]) = T(i, n + m);
  res.value = c.dot(res.x);

  // Row multipliers from the final basis: A_B' pi = c_B.
  Eigen::MatrixXd B(m, m);
  Eigen::VectorXd cB(m);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) {
      B.col(i) = Arow.col(basis[i]);
      cB(i) = c(basis[i]);
    } else {
      B.col(i) = Eigen::VectorXd::Unit(m, basis[i] - n);
      cB(i) = 0.0;
    }
  }
  res.duals = B.transpose().fullPivLu().solve(cB);
  // Undo the phase-1 row sign flips.
  for (int i = 0; i < m; ++i)
    if (b(i) < 0) res.duals(i) = -res.duals(i);
  return res;
}

SupportResult polytope_support(const Eigen::MatrixXd& A,
                               const Eigen::VectorXd& b,
                               const Eigen::VectorXd& c) {
  // Dual of max c'x over {Ax <= b}:  min b'y  s.t.  A'y = c, y >= 0.
  StandardLpResult dual = solve_standard_lp(A.transpose(), c, b);
  SupportResult out;
  if (dual.status == LpStatus::Infeasible) {
    out.bounded = false;
    return out;
  }
  if (dual.status != LpStatus::Optimal)
    fail(ErrorCode::Internal, "polytope support LP did not converge");
  out.bounded = true;
  out.value = dual.value;
  out.maximizer = dual.duals;  // multipliers of the dual are the primal point
  return out;
}

}  // namespace extdisc
