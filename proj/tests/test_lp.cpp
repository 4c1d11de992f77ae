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


#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using namespace nlg;

Errc solve_error(const LpProblem &p, Backend backend) {
  try {
    solve_lp(p, backend);
  } catch (const Error &e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

TEST(Lp, Trivial) {
  for (Backend be : {Backend::Exact, Backend::Float}) {
    LpProblem p;
    int x = p.add_variable(1);
    p.add_row({{x, 1}}, Relation::Le, 1);
    LpSolution s = solve_lp(p, be);
    EXPECT_NEAR(s.optimum.to_double(), 1.0, 1e-12);
  }
  LpProblem p;
  int x = p.add_variable(1);
  p.add_row({{x, 1}}, Relation::Le, 1);
  LpSolution s = solve_lp(p, Backend::Exact);
  EXPECT_EQ(s.optimum.exact, 1);
  EXPECT_TRUE(s.dual_certified);
}

TEST(Lp, Infeasible) {
  for (Backend be : {Backend::Exact, Backend::Float}) {
    LpProblem p;
    int x = p.add_variable(1);
    p.add_row({{x, 1}}, Relation::Ge, 2);
    p.add_row({{x, 1}}, Relation::Le, 1);
    EXPECT_EQ(solve_error(p, be), Errc::Infeasible);
  }
}

TEST(Lp, Unbounded) {
  for (Backend be : {Backend::Exact, Backend::Float}) {
    LpProblem p;
    p.add_variable(1, std::nullopt, std::nullopt);
    EXPECT_EQ(solve_error(p, be), Errc::Unbounded);
  }
}

TEST(Lp, BoundsAndFreeVariables) {
  // max x - y, -3 <= x <= 2, y free, x + y >= -1, y <= 4 -> x = 2, y = -3, value 5.
  LpProblem p;
  int x = p.add_variable(1, Rational(-3), Rational(2));
  int y = p.add_variable(-1, std::nullopt, Rational(4));
  p.add_row({{x, 1}, {y, 1}}, Relation::Ge, -1);
  LpSolution s = solve_lp(p, Backend::Exact);
  EXPECT_EQ(s.optimum.exact, 5);
  EXPECT_EQ(s.x[0], 2);
  EXPECT_EQ(s.x[1], -3);
  EXPECT_NEAR(solve_lp(p, Backend::Float).optimum.real, 5.0, 1e-9);
}

TEST(Lp, NsFeige) {
  NsResult r = ns_value(feige(), Backend::Exact);
  EXPECT_EQ(r.value.exact, Rational(2, 3));
  EXPECT_TRUE(r.dual_certified);
  EXPECT_TRUE(is_nonsignalling(r.witness));
  EXPECT_EQ(eval_correlation(feige(), r.witness).exact, Rational(2, 3));
  EXPECT_EQ(r.vars, 36u);
}

TEST(Lp, NsFeigeFloatPromotes) {
  NsResult r = ns_value(feige(), Backend::Float);
  EXPECT_NEAR(r.float_value, 2.0 / 3.0, 1e-9);
  EXPECT_TRUE(r.promoted);
  EXPECT_EQ(r.value.exact, Rational(2, 3));
}

TEST(Lp, NsConstraintsAcceptPaperStrategy) {
  LpProblem p = ns_lp(feige());
  // 4 normalizations + 3*2*1 Bob chains + 3*2*1 Alice chains.
  EXPECT_EQ(p.rows.size(), 16u);
  EXPECT_TRUE(lp_feasible(p, ns_strategy_feige().exact_table()));
  EXPECT_EQ(lp_objective(p, ns_strategy_feige().exact_table()), Rational(2, 3));
  // A signalling table is rejected.
  Correlation c = Correlation::for_game(feige(), Backend::Exact);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      c.exact(y, 0, x, y) = 1;
  EXPECT_FALSE(lp_feasible(p, c.exact_table()));
}

TEST(Lp, NsTwoFoldSymmetric) {
  NsResult r = ns_value(parallel_repeat(feige(), 2), Backend::Exact, {},
                        repetition_symmetries(feige(), 2));
  EXPECT_EQ(r.value.exact, Rational(1, 2));
  EXPECT_TRUE(is_nonsignalling(r.witness));
  EXPECT_EQ(eval_correlation(parallel_repeat(feige(), 2), r.witness).exact, Rational(1, 2));
}

TEST(Lp, NsThreeFoldFloat) {
  const Game g = parallel_repeat(feige(), 3);
  NsResult r = ns_value(g, Backend::Float, {}, repetition_symmetries(feige(), 3));
  EXPECT_NEAR(r.float_value, 1.0 / 3.0, 1e-7);
  EXPECT_TRUE(r.promoted);
  EXPECT_EQ(r.value.exact, Rational(1, 3));
  EXPECT_TRUE(lp_feasible(ns_lp(g), r.witness.exact_table()));
}

TEST(Lp, ExactBudget) {
  EXPECT_THROW(ns_value(parallel_repeat(feige(), 3), Backend::Exact), Error);
}

TEST(Lp, BadSymmetryRejected) {
  Relabeling s = Relabeling::identity(feige());
  std::swap(s.a[0], s.a[2]);
  EXPECT_THROW(ns_value(feige(), Backend::Exact, {}, {s}), Error);
}

TEST(Lp, ExportGrammar) {
  std::ostringstream os;
  write_lp(os, ns_lp(feige()));
  const std::string text = os.str();
  EXPECT_EQ(text.rfind("maximize\n", 0), 0u);
  EXPECT_NE(text.find("subject to\n"), std::string::npos);
  EXPECT_NE(text.find("  norm_0_0:"), std::string::npos);
  EXPECT_NE(text.find("  0 <= p_0_0_0_0 <= +inf\n"), std::string::npos);
  EXPECT_EQ(text.substr(text.size() - 4), "end\n");
}

TEST(Lp, PureBlandAgrees) {
  LpOptions opt;
  opt.rule = PivotRule::Bland;
  EXPECT_EQ(ns_value(feige(), Backend::Exact, opt).value.exact, Rational(2, 3));
}

// Property: on random LPs max c.x, Ax <= b, x >= 0, the exact optimum equals the
// optimum of the explicitly built dual min b.y, A^T y >= c, y >= 0, and the float
// backend agrees within 1e-9.
TEST(LpProperty, DualityExactness) {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dim(1, 5), coef(-4, 6), rhs(0, 8);
  int optimal = 0;
  for (int t = 0; t < 250; ++t) {
    const int m = dim(rng), n = dim(rng);
    std::vector<std::vector<int>> A(m, std::vector<int>(n));
    std::vector<int> b(m), c(n);
    for (auto &row : A)
      for (int &v : row)
        v = coef(rng);
    for (int &v : b)
      v = rhs(rng);
    for (int &v : c)
      v = coef(rng);
    LpProblem primal, dual;
    for (int j = 0; j < n; ++j)
      primal.add_variable(c[j]);
    for (int i = 0; i < m; ++i) {
      std::vector<std::pair<int, Rational>> row;
      for (int j = 0; j < n; ++j)
        row.push_back({j, A[i][j]});
      primal.add_row(row, Relation::Le, b[i]);
      dual.add_variable(-b[i]);
    }
    for (int j = 0; j < n; ++j) {
      std::vector<std::pair<int, Rational>> row;
      for (int i = 0; i < m; ++i)
        row.push_back({i, A[i][j]});
      dual.add_row(row, Relation::Ge, c[j]);
    }
    const Errc pe = solve_error(primal, Backend::Exact);
    if (pe == Errc::Unbounded) {
      EXPECT_EQ(solve_error(dual, Backend::Exact), Errc::Infeasible) << t;
      continue;
    }
    ASSERT_EQ(pe, Errc::InvalidArgument) << t; // x = 0 is feasible
    LpSolution ps = solve_lp(primal, Backend::Exact);
    LpSolution ds = solve_lp(dual, Backend::Exact);
    ASSERT_TRUE(ps.dual_certified);
    ASSERT_EQ(ps.optimum.exact, -ds.optimum.exact) << t;
    ASSERT_TRUE(lp_feasible(primal, ps.x));
    ASSERT_EQ(lp_objective(primal, ps.x), ps.optimum.exact);
    ASSERT_NEAR(solve_lp(primal, Backend::Float).optimum.real, ps.optimum.exact.get_d(), 1e-9);
    ++optimal;
  }
  EXPECT_GE(optimal, 100);
}

// Property: ns value dominates the classical value on random games.
TEST(LpProperty, NsDominatesClassical) {
  std::mt19937 rng(99);
  for (int t = 0; t < 200; ++t) {
    const Game g = oracle::random_game(2, 2, 2, 3, rng);
    NsResult r = ns_value(g, Backend::Exact);
    const SearchReport c = classical_value_exhaustive(g);
    ASSERT_GE(r.value.exact, c.optimum);
    ASSERT_TRUE(r.dual_certified);
    ASSERT_TRUE(is_nonsignalling(r.witness));
    ASSERT_TRUE(lp_feasible(ns_lp(g), correlation_of_deterministic(g, c.witness).exact_table()));
  }
}

} // namespace
