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

#ifndef NLG_LP_HPP
#define NLG_LP_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nlg/game.hpp"
#include "nlg/strategies.hpp"

namespace nlg {

enum class Relation { Le, Eq, Ge };

struct LpRow {
  std::vector<std::pair<int, Rational>> coeffs;
  Relation rel = Relation::Eq;
  Rational rhs = 0;
  std::string name;
};

/// maximize c.x subject to rows and bounds. Missing lower bound = -inf,
/// missing upper bound = +inf. New variables default to [0, +inf).
struct LpProblem {
  std::vector<Rational> objective;
  std::vector<std::optional<Rational>> lower, upper;
  std::vector<LpRow> rows;
  std::vector<std::string> names;

  int num_vars() const { return static_cast<int>(objective.size()); }

  int add_variable(Rational cost, std::optional<Rational> lo = Rational(0),
                   std::optional<Rational> hi = std::nullopt, std::string name = {}) {
    objective.push_back(std::move(cost));
    lower.push_back(std::move(lo));
    upper.push_back(std::move(hi));
    names.push_back(name.empty() ? "x" + std::to_string(objective.size() - 1) : std::move(name));
    return num_vars() - 1;
  }

  void add_row(std::vector<std::pair<int, Rational>> coeffs, Relation rel, Rational rhs,
               std::string name = {}) {
    rows.push_back({std::move(coeffs), rel, std::move(rhs), std::move(name)});
  }

  void check() const {
    const std::size_t n = objective.size();
    if (lower.size() != n || upper.size() != n)
      fail(Errc::DimensionMismatch, "bound arrays do not match the variable count");
    for (const LpRow &r : rows)
      for (const auto &[j, v] : r.coeffs)
        if (j < 0 || static_cast<std::size_t>(j) >= n)
          fail(Errc::DimensionMismatch, "row references an unknown variable");
    for (std::size_t j = 0; j < n; ++j)
      if (lower[j] && upper[j] && *upper[j] < *lower[j])
        fail(Errc::Infeasible, "variable bounds are inconsistent");
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  Value optimum;
  std::vector<Rational> x;  // exact backend
  std::vector<double> xf;   // float backend
  bool dual_certified = false;
  std::int64_t iterations = 0;
};

/// Dantzig pricing that switches to Bland's rule during degenerate stretches
/// still terminates; pure Bland is available for reference.
enum class PivotRule { Bland, DantzigBland };

struct LpOptions {
  PivotRule rule = PivotRule::DantzigBland;
  std::int64_t max_iterations = 5000000;
  int degenerate_switch = 50;
};

namespace detail {

/// Equality form max c.x, A x = b, x >= 0, b >= 0, with a map back to the
/// original variables: orig_j = offset_j + sum sign * std_col.
struct StandardForm {
  int m = 0, n = 0;
  std::vector<std::vector<std::pair<int, Rational>>> rows;
  std::vector<Rational> b, c;
  Rational c0 = 0;
  std::vector<Rational> offset;
  std::vector<std::vector<std::pair<int, int>>> terms;
  std::vector<int> unit_col; // per row: column with coefficient +1 only in that row, or -1
};

inline StandardForm to_standard_form(const LpProblem &p) {
  p.check();
  StandardForm s;
  const int nv = p.num_vars();
  s.offset.assign(nv, 0);
  s.terms.resize(nv);
  std::vector<LpRow> extra;
  for (int j = 0; j < nv; ++j) {
    if (p.lower[j]) {
      s.offset[j] = *p.lower[j];
      s.terms[j] = {{s.n++, 1}};
      if (p.upper[j])
        extra.push_back({{{j, Rational(1)}}, Relation::Le, *p.upper[j], {}});
    } else if (p.upper[j]) {
      s.offset[j] = *p.upper[j];
      s.terms[j] = {{s.n++, -1}};
    } else {
      s.terms[j] = {{s.n, 1}, {s.n + 1, -1}};
      s.n += 2;
    }
  }
  s.c.assign(s.n, 0);
  for (int j = 0; j < nv; ++j) {
    s.c0 += p.objective[j] * s.offset[j];
    for (auto [col, sign] : s.terms[j])
      s.c[col] += sign * p.objective[j];
  }
  auto add = [&](const LpRow &r, bool upper_row) {
    std::map<int, Rational> acc;
    Rational rhs = r.rhs;
    for (const auto &[j, v] : r.coeffs) {
      if (upper_row) {
        // x_j = l + x'_j, so x_j <= u becomes x'_j <= u - l.
        acc[s.terms[j][0].first] += v;
        rhs -= v * s.offset[j];
        continue;
      }
      rhs -= v * s.offset[j];
      for (auto [col, sign] : s.terms[j])
        acc[col] += sign * v;
    }
    int slack = -1;
    if (r.rel != Relation::Eq) {
      slack = s.n++;
      s.c.push_back(0);
      acc[slack] = r.rel == Relation::Le ? 1 : -1;
    }
    std::vector<std::pair<int, Rational>> row;
    for (auto &[col, v] : acc)
      if (v != 0)
        row.push_back({col, v});
    bool negate = rhs < 0;
    if (negate) {
      rhs = -rhs;
      for (auto &e : row)
        e.second = -e.second;
    }
    int unit = -1;
    if (slack >= 0 && ((r.rel == Relation::Le) != negate))
      unit = slack;
    s.rows.push_back(std::move(row));
    s.b.push_back(rhs);
    s.unit_col.push_back(unit);
    ++s.m;
  };
  for (const LpRow &r : p.rows)
    add(r, false);
  for (const LpRow &r : extra)
    add(r, true);
  return s;
}

inline std::vector<Rational> recover_exact(const StandardForm &s, const std::vector<Rational> &xs) {
  std::vector<Rational> x(s.offset.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = s.offset[j];
    for (auto [col, sign] : s.terms[j])
      x[j] += sign * xs[col];
  }
  return x;
}

/// Exact two-phase tableau simplex. Columns [0, n) are structural, columns
/// [n, n + m_art) are artificials (never re-enter in phase 2).
class ExactSimplex {
public:
  ExactSimplex(const StandardForm &s, const LpOptions &opt) : s_(s), opt_(opt) {}

  LpSolution solve() {
    const int m = s_.m, n = s_.n;
    // Initial basis: unit slack where available, else an artificial.
    art_of_row_.assign(m, -1);
    ncols_ = n;
    for (int i = 0; i < m; ++i)
      if (s_.unit_col[i] < 0)
        art_of_row_[i] = ncols_++;
    T_.assign(m, std::vector<Rational>(ncols_, Rational(0)));
    rhs_ = s_.b;
    basis_.assign(m, -1);
    for (int i = 0; i < m; ++i) {
      for (const auto &[j, v] : s_.rows[i])
        T_[i][j] = v;
      if (art_of_row_[i] >= 0) {
        T_[i][art_of_row_[i]] = 1;
        basis_[i] = art_of_row_[i];
      } else {
        basis_[i] = s_.unit_col[i];
      }
    }
    // Phase 1: maximize -sum(artificials).
    std::vector<Rational> c1(ncols_, Rational(0));
    for (int i = 0; i < m; ++i)
      if (art_of_row_[i] >= 0)
        c1[art_of_row_[i]] = -1;
    set_objective(c1);
    allowed_ = ncols_;
    run();
    if (z_ < 0)
      fail(Errc::Infeasible, "LP has no feasible point");
    drive_out_artificials();
    // Phase 2.
    std::vector<Rational> c2(ncols_, Rational(0));
    for (int j = 0; j < n; ++j)
      c2[j] = s_.c[j];
    set_objective(c2);
    allowed_ = n;
    if (!run())
      fail(Errc::Unbounded, "LP objective is unbounded");

    std::vector<Rational> xs(n, Rational(0));
    for (int i = 0; i < m; ++i)
      if (basis_[i] < n)
        xs[basis_[i]] = rhs_[i];
    LpSolution sol;
    sol.x = recover_exact(s_, xs);
    sol.optimum = Value::of(z_ + s_.c0);
    sol.iterations = iterations_;
    sol.dual_certified = certify(xs);
    return sol;
  }

private:
  void set_objective(const std::vector<Rational> &c) {
    cost_ = c;
    d_ = c;
    z_ = 0;
    for (int i = 0; i < s_.m; ++i) {
      const Rational &cb = c[basis_[i]];
      if (cb == 0)
        continue;
      z_ += cb * rhs_[i];
      for (int j = 0; j < ncols_; ++j)
        if (T_[i][j] != 0)
          d_[j] -= cb * T_[i][j];
    }
  }

  void pivot(int r, int q) {
    std::vector<Rational> &row = T_[r];
    const Rational piv = row[q];
    std::vector<int> nz;
    for (int j = 0; j < ncols_; ++j)
      if (row[j] != 0) {
        row[j] /= piv;
        nz.push_back(j);
      }
    rhs_[r] /= piv;
    for (int i = 0; i < s_.m; ++i) {
      if (i == r || T_[i][q] == 0)
        continue;
      const Rational f = T_[i][q];
      for (int j : nz)
        T_[i][j] -= f * row[j];
      rhs_[i] -= f * rhs_[r];
    }
    if (d_[q] != 0) {
      const Rational f = d_[q];
      for (int j : nz)
        d_[j] -= f * row[j];
      z_ += f * rhs_[r];
    }
    basis_[r] = q;
    ++iterations_;
  }

  // Returns false on unboundedness.
  bool run() {
    int degenerate = 0;
    while (true) {
      if (iterations_ >= opt_.max_iterations)
        fail(Errc::NumericalFailure, "simplex iteration limit reached");
      bool bland = opt_.rule == PivotRule::Bland || degenerate >= opt_.degenerate_switch;
      int q = -1;
      for (int j = 0; j < allowed_; ++j) {
        if (d_[j] <= 0)
          continue;
        if (q < 0 || (!bland && d_[j] > d_[q]))
          q = j;
        if (bland)
          break;
      }
      if (q < 0)
        return true;
      int r = -1;
      Rational best;
      for (int i = 0; i < s_.m; ++i) {
        const Rational &a = T_[i][q];
        if (a <= 0) {
          continue;
        }
        Rational ratio = rhs_[i] / a;
        if (r < 0 || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r < 0)
        return false;
      degenerate = best == 0 ? degenerate + 1 : 0;
      pivot(r, q);
    }
  }

  void drive_out_artificials() {
    for (int i = 0; i < s_.m; ++i) {
      if (basis_[i] < s_.n)
        continue;
      for (int j = 0; j < s_.n; ++j)
        if (T_[i][j] != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  // Dual y_i = cost of the row's initial basic column minus its reduced cost;
  // verified against the standard form independently of the tableau.
  bool certify(const std::vector<Rational> &xs) const {
    std::vector<Rational> y(s_.m);
    for (int i = 0; i < s_.m; ++i) {
      int k = art_of_row_[i] >= 0 ? art_of_row_[i] : s_.unit_col[i];
      y[i] = cost_[k] - d_[k];
    }
    std::vector<Rational> aty(s_.n, Rational(0));
    for (int i = 0; i < s_.m; ++i)
      for (const auto &[j, v] : s_.rows[i])
        aty[j] += v * y[i];
    Rational dual_obj = 0, primal_obj = 0;
    for (int i = 0; i < s_.m; ++i)
      dual_obj += s_.b[i] * y[i];
    for (int j = 0; j < s_.n; ++j) {
      if (aty[j] < s_.c[j])
        return false;
      // Complementary slackness.
      if (xs[j] != 0 && aty[j] != s_.c[j])
        return false;
      primal_obj += s_.c[j] * xs[j];
    }
    for (int i = 0; i < s_.m; ++i) {
      Rational lhs = 0;
      for (const auto &[j, v] : s_.rows[i])
        lhs += v * xs[j];
      if (lhs != s_.b[i])
        return false;
    }
    for (const Rational &v : xs)
      if (v < 0)
        return false;
    return dual_obj == primal_obj;
  }

  const StandardForm &s_;
  LpOptions opt_;
  int ncols_ = 0, allowed_ = 0;
  std::vector<std::vector<Rational>> T_;
  std::vector<Rational> rhs_, d_, cost_;
  std::vector<int> basis_, art_of_row_;
  Rational z_ = 0;
  std::int64_t iterations_ = 0;
};

/// Revised simplex in double precision: explicit dense basis inverse with
/// product updates, periodic refactorization, Devex pricing, Harris ratio test.
class FloatSimplex {
public:
  explicit FloatSimplex(const StandardForm &s, const LpOptions &opt) : s_(s), opt_(opt) {}

  LpSolution solve() {
    const int m = s_.m, n = s_.n;
    ncols_ = n + m; // one artificial per row
    col_start_.assign(ncols_ + 1, 0);
    {
      std::vector<int> count(ncols_, 0);
      for (int i = 0; i < m; ++i)
        for (const auto &e : s_.rows[i])
          ++count[e.first];
      for (int j = n; j < ncols_; ++j)
        count[j] = 1;
      for (int j = 0; j < ncols_; ++j)
        col_start_[j + 1] = col_start_[j] + count[j];
      row_idx_.resize(col_start_[ncols_]);
      val_.resize(col_start_[ncols_]);
      std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
      for (int i = 0; i < m; ++i)
        for (const auto &[j, v] : s_.rows[i]) {
          row_idx_[fill[j]] = i;
          val_[fill[j]++] = v.get_d();
        }
      for (int i = 0; i < m; ++i) {
        row_idx_[fill[n + i]] = i;
        val_[fill[n + i]++] = 1.0;
      }
    }
    b_.resize(m);
    for (int i = 0; i < m; ++i)
      b_(i) = s_.b[i].get_d();
    basis_.resize(m);
    in_basis_.assign(ncols_, -1);
    for (int i = 0; i < m; ++i) {
      basis_[i] = n + i;
      in_basis_[n + i] = i;
    }
    binv_ = Eigen::MatrixXd::Identity(m, m);
    xb_ = b_;

    std::vector<double> c1(ncols_, 0.0);
    for (int j = n; j < ncols_; ++j)
      c1[j] = -1.0;
    allowed_ = ncols_;
    run(c1);
    refactor();
    double infeas = 0;
    for (int i = 0; i < m; ++i)
      if (basis_[i] >= n)
        infeas += std::max(0.0, xb_(i));
    if (infeas > 1e-7)
      fail(Errc::Infeasible, "LP has no feasible point (phase 1 residual " +
                                 std::to_string(infeas) + ")");
    drive_out_artificials();
    refactor();
    std::vector<double> c2(ncols_, 0.0);
    for (int j = 0; j < n; ++j)
      c2[j] = s_.c[j].get_d();
    allowed_ = n;
    // Re-run from a fresh factorization until pricing agrees.
    for (int pass = 0; pass < 5; ++pass) {
      if (!run(c2))
        fail(Errc::Unbounded, "LP objective is unbounded");
      refactor();
      if (optimal_after_refactor(c2))
        break;
    }

    LpSolution sol;
    std::vector<double> xs(n, 0.0);
    for (int i = 0; i < m; ++i)
      if (basis_[i] < n)
        xs[basis_[i]] = std::max(0.0, xb_(i));
    sol.xf.assign(s_.offset.size(), 0.0);
    double obj = s_.c0.get_d();
    for (std::size_t j = 0; j < s_.offset.size(); ++j) {
      sol.xf[j] = s_.offset[j].get_d();
      for (auto [col, sign] : s_.terms[j])
        sol.xf[j] += sign * xs[col];
    }
    for (int j = 0; j < n; ++j)
      obj += c2[j] * xs[j];
    sol.optimum = Value::of(obj);
    sol.iterations = iterations_;
    return sol;
  }

private:
  static constexpr double kPivotTol = 1e-7;
  static constexpr double kFeasTol = 1e-9;
  static constexpr double kOptTol = 1e-9;
  static constexpr int kRefactorEvery = 1500;

  void column(int j, Eigen::VectorXd &out) const {
    out.setZero();
    for (int k = col_start_[j]; k < col_start_[j + 1]; ++k)
      out += binv_.col(row_idx_[k]) * val_[k];
  }

  double dot_col(const Eigen::VectorXd &y, int j) const {
    double v = 0;
    for (int k = col_start_[j]; k < col_start_[j + 1]; ++k)
      v += y(row_idx_[k]) * val_[k];
    return v;
  }

  void refactor() {
    const int m = s_.m;
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int k = col_start_[basis_[i]]; k < col_start_[basis_[i] + 1]; ++k)
        B(row_idx_[k], i) = val_[k];
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    binv_ = lu.inverse();
    if (!binv_.allFinite())
      fail(Errc::NumericalFailure, "basis matrix became singular");
    xb_ = binv_ * b_;
  }

  void duals(const std::vector<double> &c, Eigen::VectorXd &y) const {
    Eigen::VectorXd cb(s_.m);
    for (int i = 0; i < s_.m; ++i)
      cb(i) = c[basis_[i]];
    y = binv_.transpose() * cb;
  }

  bool run(const std::vector<double> &c) {
    const int m = s_.m;
    Eigen::VectorXd y, alpha(m), rho(m);
    duals(c, y);
    std::vector<double> weight(ncols_, 1.0);
    int since_refactor = 0;
    while (true) {
      if (iterations_ >= opt_.max_iterations)
        fail(Errc::NumericalFailure, "simplex iteration limit reached");
      if (since_refactor >= kRefactorEvery ||
          (since_refactor > 0 && since_refactor % 50 == 0 && primal_residual() > 1e-9)) {
        refactor();
        duals(c, y);
        since_refactor = 0;
      }
      // Devex pricing.
      int q = -1;
      double best = 0, dq = 0;
      for (int j = 0; j < allowed_; ++j) {
        if (in_basis_[j] >= 0)
          continue;
        double d = c[j] - dot_col(y, j);
        if (d <= kOptTol)
          continue;
        double score = d * d / weight[j];
        if (score > best) {
          best = score;
          q = j;
          dq = d;
        }
      }
      if (q < 0)
        return true;
      column(q, alpha);
      // Zero-level artificials left after phase 1 must stay at zero: any
      // such row with a nonzero entry leaves first, with a zero step.
      int r = -1;
      double best_alpha = 0;
      for (int i = 0; i < m; ++i)
        if (is_locked_artificial(i) && std::abs(alpha(i)) > kPivotTol &&
            std::abs(alpha(i)) > best_alpha) {
          r = i;
          best_alpha = std::abs(alpha(i));
        }
      if (r < 0) {
        // Harris two-pass ratio test.
        double theta_max = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i)
          if (alpha(i) > kPivotTol)
            theta_max = std::min(theta_max, (std::max(xb_(i), 0.0) + kFeasTol) / alpha(i));
        if (!std::isfinite(theta_max))
          return false;
        for (int i = 0; i < m; ++i) {
          double a = alpha(i);
          if (a > kPivotTol && std::max(xb_(i), 0.0) / a <= theta_max && a > best_alpha) {
            r = i;
            best_alpha = a;
          }
        }
      }
      if (r < 0)
        return false;
      const double ar = alpha(r);
      const double theta = is_locked_artificial(r) ? 0.0 : std::max(xb_(r), 0.0) / ar;
      rho = binv_.row(r).transpose();
      // Devex reference weights.
      const double wq = weight[q];
      for (int j = 0; j < allowed_; ++j) {
        if (in_basis_[j] >= 0 || j == q)
          continue;
        double arj = dot_col(rho, j);
        if (arj != 0)
          weight[j] = std::max(weight[j], (arj / ar) * (arj / ar) * wq);
      }
      weight[basis_[r]] = std::max(wq / (ar * ar), 1.0);
      // Updates.
      xb_ -= theta * alpha;
      xb_(r) = theta;
      y += (dq / ar) * rho;
      Eigen::VectorXd col = alpha / ar;
      col(r) = 1.0 - 1.0 / ar;
      binv_.noalias() -= col * rho.transpose();
      in_basis_[basis_[r]] = -1;
      basis_[r] = q;
      in_basis_[q] = r;
      ++iterations_;
      ++since_refactor;
    }
  }

  // max |B xb - b|
  double primal_residual() const {
    Eigen::VectorXd r = -b_;
    for (int i = 0; i < s_.m; ++i)
      for (int k = col_start_[basis_[i]]; k < col_start_[basis_[i] + 1]; ++k)
        r(row_idx_[k]) += val_[k] * xb_(i);
    return r.cwiseAbs().maxCoeff();
  }

  bool optimal_after_refactor(const std::vector<double> &c) const {
    Eigen::VectorXd y;
    duals(c, y);
    for (int j = 0; j < allowed_; ++j)
      if (in_basis_[j] < 0 && c[j] - dot_col(y, j) > kOptTol)
        return false;
    return true;
  }

  bool is_locked_artificial(int i) const { return allowed_ == s_.n && basis_[i] >= s_.n; }

  void drive_out_artificials() {
    const int m = s_.m, n = s_.n;
    Eigen::VectorXd rho(m), alpha(m);
    for (int r = 0; r < m; ++r) {
      if (basis_[r] < n)
        continue;
      rho = binv_.row(r).transpose();
      int q = -1;
      double best = 1e-7;
      for (int j = 0; j < n; ++j) {
        if (in_basis_[j] >= 0)
          continue;
        double v = std::abs(dot_col(rho, j));
        if (v > best) {
          best = v;
          q = j;
        }
      }
      if (q < 0)
        continue;
      column(q, alpha);
      const double ar = alpha(r);
      const double theta = xb_(r) / ar;
      xb_ -= theta * alpha;
      xb_(r) = theta;
      Eigen::VectorXd col = alpha / ar;
      col(r) = 1.0 - 1.0 / ar;
      binv_.noalias() -= col * rho.transpose();
      in_basis_[basis_[r]] = -1;
      basis_[r] = q;
      in_basis_[q] = r;
      ++iterations_;
    }
  }

  const StandardForm &s_;
  LpOptions opt_;
  int ncols_ = 0, allowed_ = 0;
  std::vector<int> col_start_, row_idx_;
  std::vector<double> val_;
  Eigen::VectorXd b_, xb_;
  Eigen::MatrixXd binv_;
  std::vector<int> basis_, in_basis_;
  std::int64_t iterations_ = 0;
};

} // namespace detail

/// Solves the LP. Throws Error(Infeasible) / Error(Unbounded).
inline LpSolution solve_lp(const LpProblem &p, Backend backend, const LpOptions &opt = {}) {
  detail::StandardForm s = detail::to_standard_form(p);
  if (backend == Backend::Exact)
    return detail::ExactSimplex(s, opt).solve();
  return detail::FloatSimplex(s, opt).solve();
}

/// Exact feasibility of x for p (rows and bounds).
inline bool lp_feasible(const LpProblem &p, const std::vector<Rational> &x) {
  if (static_cast<int>(x.size()) != p.num_vars())
    return false;
  for (int j = 0; j < p.num_vars(); ++j) {
    if (p.lower[j] && x[j] < *p.lower[j])
      return false;
    if (p.upper[j] && x[j] > *p.upper[j])
      return false;
  }
  for (const LpRow &r : p.rows) {
    Rational lhs = 0;
    for (const auto &[j, v] : r.coeffs)
      lhs += v * x[j];
    bool ok = r.rel == Relation::Eq ? lhs == r.rhs : r.rel == Relation::Le ? lhs <= r.rhs
                                                                           : lhs >= r.rhs;
    if (!ok)
      return false;
  }
  return true;
}

inline Rational lp_objective(const LpProblem &p, const std::vector<Rational> &x) {
  Rational v = 0;
  for (int j = 0; j < p.num_vars(); ++j)
    v += p.objective[j] * x[j];
  return v;
}

/// Plain-text export:
///   maximize
///     <coef> <var> ...
///   subject to
///     <name>: <coef> <var> ... (<=|=|>=) <rhs>
///   bounds
///     <lo|-inf> <= <var> <= <hi|+inf>
///   end
inline void write_lp(std::ostream &os, const LpProblem &p) {
  auto term = [&](const Rational &v, int j) { return to_short_string(v) + " " + p.names[j]; };
  os << "maximize\n ";
  for (int j = 0; j < p.num_vars(); ++j)
    if (p.objective[j] != 0)
      os << " + " << term(p.objective[j], j);
  os << "\nsubject to\n";
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const LpRow &r = p.rows[i];
    os << "  " << (r.name.empty() ? "r" + std::to_string(i) : r.name) << ":";
    for (const auto &[j, v] : r.coeffs)
      os << " + " << term(v, j);
    os << (r.rel == Relation::Le ? " <= " : r.rel == Relation::Eq ? " = " : " >= ")
       << to_short_string(r.rhs) << "\n";
  }
  os << "bounds\n";
  for (int j = 0; j < p.num_vars(); ++j)
    os << "  " << (p.lower[j] ? to_short_string(*p.lower[j]) : "-inf") << " <= " << p.names[j]
       << " <= " << (p.upper[j] ? to_short_string(*p.upper[j]) : "+inf") << "\n";
  os << "end\n";
}

/// Variable p(a,b|x,y) uses the Correlation index. Rows: normalization per
/// (x,y); Bob marginal per (b,y) between consecutive x; Alice marginal per
/// (a,x) between consecutive y.
inline LpProblem ns_lp(const Game &game) {
  LpProblem p;
  Correlation shape = Correlation::for_game(game, Backend::Exact);
  const int X = game.x_size(), Y = game.y_size(), A = game.a_size(), B = game.b_size();
  for (int a = 0; a < A; ++a)
    for (int b = 0; b < B; ++b)
      for (int x = 0; x < X; ++x)
        for (int y = 0; y < Y; ++y)
          p.add_variable(game.wins(a, b, x, y) ? game.prior(x, y) : Rational(0), Rational(0),
                         std::nullopt,
                         "p_" + std::to_string(a) + "_" + std::to_string(b) + "_" +
                             std::to_string(x) + "_" + std::to_string(y));
  auto var = [&](int a, int b, int x, int y) { return static_cast<int>(shape.index(a, b, x, y)); };
  for (int x = 0; x < X; ++x)
    for (int y = 0; y < Y; ++y) {
      std::vector<std::pair<int, Rational>> row;
      for (int a = 0; a < A; ++a)
        for (int b = 0; b < B; ++b)
          row.push_back({var(a, b, x, y), Rational(1)});
      p.add_row(std::move(row), Relation::Eq, 1,
                "norm_" + std::to_string(x) + "_" + std::to_string(y));
    }
  for (int b = 0; b < B; ++b)
    for (int y = 0; y < Y; ++y)
      for (int x = 0; x + 1 < X; ++x) {
        std::vector<std::pair<int, Rational>> row;
        for (int a = 0; a < A; ++a) {
          row.push_back({var(a, b, x, y), Rational(1)});
          row.push_back({var(a, b, x + 1, y), Rational(-1)});
        }
        p.add_row(std::move(row), Relation::Eq, 0,
                  "bob_" + std::to_string(b) + "_" + std::to_string(y) + "_" + std::to_string(x));
      }
  for (int a = 0; a < A; ++a)
    for (int x = 0; x < X; ++x)
      for (int y = 0; y + 1 < Y; ++y) {
        std::vector<std::pair<int, Rational>> row;
        for (int b = 0; b < B; ++b) {
          row.push_back({var(a, b, x, y), Rational(1)});
          row.push_back({var(a, b, x, y + 1), Rational(-1)});
        }
        p.add_row(std::move(row), Relation::Eq, 0,
                  "alice_" + std::to_string(a) + "_" + std::to_string(x) + "_" +
                      std::to_string(y));
      }
  return p;
}

inline constexpr std::int64_t kExactLpBudget = 5000;
inline constexpr std::int64_t kFloatLpBudget = 100000;
inline constexpr std::int64_t kWitnessDenominator = 1000;

struct NsResult {
  Value value;          // exact for the exact backend or a promoted float solve
  double float_value = 0;
  bool promoted = false; // float witness rounded and verified exactly
  bool dual_certified = false;
  Correlation witness;
  std::int64_t iterations = 0;
  std::size_t rows = 0, vars = 0;
};

namespace detail {

/// Orbits of LP variables (Correlation index) under relabelings fixing the game.
inline std::vector<int> variable_orbits(const Game &game, const std::vector<Relabeling> &gens,
                                        int &count) {
  Correlation shape = Correlation::for_game(game, Backend::Exact);
  const std::size_t n = game.table_size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Relabeling &s : gens) {
    if (!verifies(game, game, s))
      fail(Errc::InvalidArgument, "symmetry generator does not fix the game");
    for (int a = 0; a < game.a_size(); ++a)
      for (int b = 0; b < game.b_size(); ++b)
        for (int x = 0; x < game.x_size(); ++x)
          for (int y = 0; y < game.y_size(); ++y) {
            int u = find(static_cast<int>(shape.index(a, b, x, y)));
            int v = find(static_cast<int>(shape.index(s.a[a], s.b[b], s.x[x], s.y[y])));
            if (u != v)
              parent[std::max(u, v)] = std::min(u, v);
          }
  }
  std::vector<int> id(n, -1), orbit(n);
  count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    int root = find(static_cast<int>(v));
    if (id[root] < 0)
      id[root] = count++;
    orbit[v] = id[root];
  }
  return orbit;
}

/// Substitutes p_v = z_orbit(v) into p; duplicate and empty rows are dropped.
inline LpProblem reduce_lp(const LpProblem &p, const std::vector<int> &orbit, int count) {
  LpProblem q;
  std::vector<Rational> obj(count);
  for (int j = 0; j < p.num_vars(); ++j)
    obj[orbit[j]] += p.objective[j];
  for (int k = 0; k < count; ++k)
    q.add_variable(obj[k], Rational(0), std::nullopt, "z" + std::to_string(k));
  std::set<std::pair<std::vector<std::pair<int, Rational>>, Rational>> seen;
  for (const LpRow &r : p.rows) {
    std::map<int, Rational> acc;
    for (const auto &[j, v] : r.coeffs)
      acc[orbit[j]] += v;
    std::vector<std::pair<int, Rational>> coeffs;
    for (auto &[k, v] : acc)
      if (v != 0)
        coeffs.push_back({k, v});
    if (coeffs.empty()) {
      if (r.rhs != 0)
        fail(Errc::Infeasible, "symmetric LP has an inconsistent row");
      continue;
    }
    // Scale so the leading coefficient is 1 before deduplication.
    Rational lead = coeffs.front().second;
    std::vector<std::pair<int, Rational>> key = coeffs;
    for (auto &kv : key)
      kv.second /= lead;
    if (!seen.insert({key, r.rhs / lead}).second)
      continue;
    q.add_row(std::move(coeffs), r.rel, r.rhs, r.name);
  }
  return q;
}

} // namespace detail

/// Non-signalling value. Non-empty `symmetries` (relabelings fixing the game)
/// restrict the solve to orbit-constant correlations, which attain the
/// optimum because the objective and the polytope are invariant.
inline NsResult ns_value(const Game &game, Backend backend, const LpOptions &opt = {},
                         const std::vector<Relabeling> &symmetries = {}) {
  const std::int64_t nvars = static_cast<std::int64_t>(game.table_size());
  if (nvars > (backend == Backend::Exact ? kExactLpBudget : kFloatLpBudget))
    fail(Errc::BudgetExceeded, std::to_string(nvars) + " LP variables exceed the backend budget");
  LpProblem p = ns_lp(game);
  std::vector<int> orbit;
  int count = p.num_vars();
  LpProblem reduced;
  if (!symmetries.empty()) {
    orbit = detail::variable_orbits(game, symmetries, count);
    reduced = detail::reduce_lp(p, orbit, count);
  }
  const LpProblem &solved = symmetries.empty() ? p : reduced;
  LpSolution sol = solve_lp(solved, backend, opt);
  if (!symmetries.empty()) {
    std::vector<Rational> x(p.num_vars());
    std::vector<double> xf(p.num_vars());
    for (int j = 0; j < p.num_vars(); ++j) {
      if (!sol.x.empty())
        x[j] = sol.x[orbit[j]];
      if (!sol.xf.empty())
        xf[j] = sol.xf[orbit[j]];
    }
    sol.x = std::move(x);
    sol.xf = std::move(xf);
  }
  NsResult r;
  r.rows = solved.rows.size();
  r.vars = static_cast<std::size_t>(solved.num_vars());
  r.iterations = sol.iterations;
  if (backend == Backend::Exact) {
    r.value = sol.optimum;
    r.float_value = sol.optimum.to_double();
    r.dual_certified = sol.dual_certified;
    r.witness = Correlation::for_game(game, Backend::Exact);
    r.witness.exact_table() = sol.x;
    return r;
  }
  r.float_value = sol.optimum.real;
  r.value = sol.optimum;
  r.witness = Correlation::for_game(game, Backend::Float);
  r.witness.real_table() = sol.xf;
  // Round the witness and re-verify exactly.
  std::vector<Rational> xr(sol.xf.size());
  for (std::size_t j = 0; j < xr.size(); ++j)
    xr[j] = rationalize(sol.xf[j], kWitnessDenominator);
  Rational claimed = rationalize(sol.optimum.real, kWitnessDenominator);
  if (lp_feasible(p, xr) && lp_objective(p, xr) == claimed) {
    r.promoted = true;
    r.value = Value::of(claimed);
    r.witness = Correlation::for_game(game, Backend::Exact);
    r.witness.exact_table() = xr;
  }
  return r;
}

} // namespace nlg

#endif // NLG_LP_HPP
