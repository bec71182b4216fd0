// SPDX-License-Identifier: Apache-2.0

#include "simplex_qp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace extdisc {

namespace {
constexpr double kNegTol = 1e-12;
constexpr double kOptTol = 1e-11;
}  // namespace

SimplexQpResult solve_simplex_qp(const Eigen::MatrixXd& Q,
                                 const Eigen::VectorXd& a,
                                 const Eigen::VectorXd* warm_start) {
  const int n = static_cast<int>(a.size());
  SimplexQpResult res;
  if (n == 1) {
    res.lambda = Eigen::VectorXd::Ones(1);
    res.converged = true;
    return res;
  }

  const double scale = std::max({1.0, Q.cwiseAbs().maxCoeff(),
                                 a.cwiseAbs().maxCoeff()});

  Eigen::VectorXd lam;
  if (warm_start && warm_start->size() == n && warm_start->minCoeff() >= 0.0 &&
      warm_start->sum() > 0.5) {
    lam = *warm_start / warm_start->sum();
  } else {
    int j0;
    a.minCoeff(&j0);
    lam = Eigen::VectorXd::Zero(n);
    lam(j0) = 1.0;
  }

  std::vector<int> support;
  for (int k = 0; k < n; ++k)
    if (lam(k) > 1e-14) support.push_back(k);
  if (support.empty()) {
    lam.setZero();
    lam(0) = 1.0;
    support.push_back(0);
  }

  const int max_iter = 40 * n + 100;
  for (int iter = 0; iter < max_iter; ++iter) {
    res.iterations = iter + 1;
    const int s = static_cast<int>(support.size());

    // Equality-constrained subproblem on the support.
    Eigen::MatrixXd K(s + 1, s + 1);
    Eigen::VectorXd rhs(s + 1);
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) K(i, j) = Q(support[i], support[j]);
      K(i, i) += 1e-12 * scale;
      K(i, s) = 1.0;
      K(s, i) = 1.0;
      rhs(i) = -a(support[i]);
    }
    K(s, s) = 0.0;
    rhs(s) = 1.0;
    Eigen::VectorXd sol = K.fullPivLu().solve(rhs);
    if (!sol.allFinite()) return res;  // converged=false, caller falls back
    double mu = sol(s);

    bool interior = true;
    for (int i = 0; i < s; ++i)
      if (sol(i) < -kNegTol) interior = false;

    if (interior) {
      Eigen::VectorXd trial = Eigen::VectorXd::Zero(n);
      for (int i = 0; i < s; ++i) trial(support[i]) = std::max(0.0, sol(i));
      trial /= trial.sum();
      lam = trial;
      // KKT check outside the support.
      Eigen::VectorXd grad = Q * lam + a;
      int worst = -1;
      double worst_viol = -kOptTol * scale;
      for (int k = 0; k < n; ++k) {
        if (lam(k) > 1e-14) continue;
        double v = grad(k) - mu;
        if (v < worst_viol) {
          worst_viol = v;
          worst = k;
        }
      }
      if (worst < 0) {
        res.lambda = lam;
        res.converged = true;
        return res;
      }
      support.clear();
      for (int k = 0; k < n; ++k)
        if (lam(k) > 1e-14) support.push_back(k);
      if (std::find(support.begin(), support.end(), worst) == support.end())
        support.push_back(worst);
      std::sort(support.begin(), support.end());
    } else {
      // Step toward the subproblem solution until a coordinate hits zero.
      double alpha = 1.0;
      int blocking = -1;
      for (int i = 0; i < s; ++i) {
        int k = support[i];
        double dir = sol(i) - lam(k);
        if (dir < -1e-16) {
          double step = lam(k) / (lam(k) - sol(i));
          if (step < alpha) {
            alpha = step;
            blocking = k;
          }
        }
      }
      for (int i = 0; i < s; ++i) {
        int k = support[i];
        lam(k) += alpha * (sol(i) - lam(k));
        if (lam(k) < 1e-15) lam(k) = 0.0;
      }
      if (blocking >= 0) lam(blocking) = 0.0;
      double total = lam.sum();
      if (total <= 0) return res;
      lam /= total;
      support.clear();
      for (int k = 0; k < n; ++k)
        if (lam(k) > 1e-14) support.push_back(k);
      if (support.empty()) return res;
    }
  }
  return res;  // iteration cap: converged=false
}

}  // namespace extdisc
