// Copyright 2026 The nlg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef NLG_SDP_HPP
#define NLG_SDP_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nlg/error.hpp"

namespace nlg {

/// Primal  min C.X  s.t. A_i.X = b_i, X psd.
/// Dual    max b'y  s.t. S = C - sum_i y_i A_i psd.
struct SdpProblem {
  Eigen::MatrixXd C;
  std::vector<Eigen::MatrixXd> A;
  Eigen::VectorXd b;

  int dim() const { return static_cast<int>(C.rows()); }
  int constraints() const { return static_cast<int>(A.size()); }
};

struct SdpOptions {
  double tol = 1e-8;        // relative gap and infeasibilities
  double fallback_tol = 1e-6; // accepted when progress stalls above `tol`
  int max_iterations = 100;
};

struct SdpResult {
  double primal = 0, dual = 0; // C.X and b'y
  Eigen::MatrixXd X, S;
  Eigen::VectorXd y;
  int iterations = 0;
  bool converged = false; // all measures within SdpOptions::tol
  double gap = 0, primal_infeasibility = 0, dual_infeasibility = 0;
  std::vector<std::string> trace;
};

namespace detail {

inline double frob(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
  return a.cwiseProduct(b).sum();
}

inline Eigen::MatrixXd sym(const Eigen::MatrixXd &m) { return 0.5 * (m + m.transpose()); }

/// Largest alpha <= 1 with M + alpha dM psd, given the Cholesky factor of M.
inline double max_step(const Eigen::LLT<Eigen::MatrixXd> &chol, const Eigen::MatrixXd &dM) {
  Eigen::MatrixXd t = chol.matrixL().solve(dM);
  t = chol.matrixL().solve(t.transpose()).transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym(t), Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  return lo >= 0 ? std::numeric_limits<double>::infinity() : -1.0 / lo;
}

} // namespace detail

/// Infeasible primal-dual path following with the HKM direction and
/// Mehrotra's predictor-corrector.
inline SdpResult sdp_solve(const SdpProblem &p, const SdpOptions &opt = {}) {
  using Eigen::MatrixXd;
  using Eigen::VectorXd;
  const int n = p.dim(), m = p.constraints();
  if (p.C.cols() != n || p.b.size() != m)
    fail(Errc::DimensionMismatch, "SDP data have inconsistent sizes");
  for (const MatrixXd &a : p.A)
    if (a.rows() != n || a.cols() != n)
      fail(Errc::DimensionMismatch, "constraint matrix has the wrong size");

  auto op = [&](const MatrixXd &X) {
    VectorXd v(m);
    for (int i = 0; i < m; ++i)
      v(i) = detail::frob(p.A[i], X);
    return v;
  };
  auto adj = [&](const VectorXd &y) {
    MatrixXd s = MatrixXd::Zero(n, n);
    for (int i = 0; i < m; ++i)
      if (y(i) != 0)
        s += y(i) * p.A[i];
    return s;
  };

  double norm_a = 0, ratio = 0;
  for (int i = 0; i < m; ++i) {
    const double na = p.A[i].norm();
    norm_a = std::max(norm_a, na);
    ratio = std::max(ratio, (1.0 + std::abs(p.b(i))) / (1.0 + na));
  }
  const double xi = std::max({10.0, std::sqrt(double(n)), n * ratio});
  const double eta = std::max({10.0, std::sqrt(double(n)), norm_a, p.C.norm()});
  SdpResult r;
  MatrixXd X = xi * MatrixXd::Identity(n, n), S = eta * MatrixXd::Identity(n, n);
  VectorXd y = VectorXd::Zero(m);
  const double nb = 1.0 + p.b.norm(), nc = 1.0 + p.C.norm();
  SdpResult best;
  double best_measure = std::numeric_limits<double>::infinity();
  int since_best = 0;

  for (int it = 0;; ++it) {
    VectorXd rp = p.b - op(X);
    MatrixXd rd = detail::sym(p.C - adj(y) - S);
    const double pobj = detail::frob(p.C, X), dobj = p.b.dot(y);
    const double mu = detail::frob(X, S) / n;
    r.gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    r.primal_infeasibility = rp.norm() / nb;
    r.dual_infeasibility = rd.norm() / nc;
    {
      std::ostringstream line;
      line << "it=" << it << " pobj=" << pobj << " dobj=" << dobj << " gap=" << r.gap
           << " pinf=" << r.primal_infeasibility << " dinf=" << r.dual_infeasibility;
      r.trace.push_back(line.str());
    }
    const double measure =
        std::max({r.gap, r.primal_infeasibility, r.dual_infeasibility});
    if (measure < best_measure) {
      best_measure = measure;
      best = r;
      best.primal = pobj;
      best.dual = dobj;
      best.X = X;
      best.S = S;
      best.y = y;
      best.iterations = it;
      since_best = 0;
    } else {
      ++since_best;
    }
    if (measure <= opt.tol) {
      best.converged = true;
      best.trace = r.trace;
      return best;
    }
    const bool stalled = since_best >= 8 || it >= opt.max_iterations;
    if (stalled && best_measure <= opt.fallback_tol) {
      best.trace = r.trace;
      return best;
    }
    if (stalled || !X.allFinite() || !S.allFinite()) {
      std::string msg = "SDP solver did not converge; trace:";
      for (const std::string &l : r.trace)
        msg += "\n  " + l;
      fail(Errc::NumericalFailure, msg);
    }

    Eigen::LLT<MatrixXd> cx(X), cs(S);
    if (cx.info() != Eigen::Success || cs.info() != Eigen::Success) {
      if (best_measure <= opt.fallback_tol) {
        best.trace = r.trace;
        return best;
      }
      fail(Errc::NumericalFailure, "iterate lost positive definiteness");
    }
    const MatrixXd Sinv = cs.solve(MatrixXd::Identity(n, n));

    // Schur complement M_ij = A_i . (X A_j S^-1).
    std::vector<MatrixXd> XAS(m);
    MatrixXd M(m, m);
    for (int j = 0; j < m; ++j)
      XAS[j] = X * p.A[j] * Sinv;
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j)
        M(i, j) = M(j, i) = detail::frob(p.A[i], XAS[j]);
    Eigen::LDLT<MatrixXd> schur(M);
    if (schur.info() != Eigen::Success)
      fail(Errc::NumericalFailure, "Schur complement factorization failed");

    const MatrixXd XRdS = X * rd * Sinv;
    const VectorXd base = rp + op(XRdS);
    // Direction for the complementarity target Rc: dX = (Rc - X dS) S^-1 - X.
    auto direction = [&](const MatrixXd &Rc, MatrixXd &dX, VectorXd &dy, MatrixXd &dS) {
      const MatrixXd G = Rc * Sinv - X;
      const VectorXd rhs = base - op(G);
      dy = schur.solve(rhs);
      dy += schur.solve(rhs - M * dy);
      dS = detail::sym(rd - adj(dy));
      dX = detail::sym(G - X * dS * Sinv);
    };
    MatrixXd dXa, dSa, dX, dS;
    VectorXd dya, dy;
    direction(MatrixXd::Zero(n, n), dXa, dya, dSa);
    const double ap = std::min(1.0, detail::max_step(cx, dXa));
    const double ad = std::min(1.0, detail::max_step(cs, dSa));
    const double mu_aff = detail::frob(X + ap * dXa, S + ad * dSa) / n;
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);
    direction(sigma * mu * MatrixXd::Identity(n, n) - dXa * dSa, dX, dy, dS);

    const double sp = std::min(1.0, 0.95 * detail::max_step(cx, dX));
    const double sd = std::min(1.0, 0.95 * detail::max_step(cs, dS));
    X = detail::sym(X + sp * dX);
    S = detail::sym(S + sd * dS);
    y += sd * dy;
  }
}

} // namespace nlg

#endif // NLG_SDP_HPP
