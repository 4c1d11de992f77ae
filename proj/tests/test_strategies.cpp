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


#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using namespace nlg;

Correlation det(const Game &g, std::vector<int> f, std::vector<int> h) {
  return correlation_of_deterministic(g, DeterministicStrategy{std::move(f), std::move(h)});
}

TEST(Strategies, BotAndZeroWinsHalf) {
  Value v = eval_correlation(feige(), det(feige(), {kBot, kBot}, {0, 0}));
  ASSERT_TRUE(v.is_exact());
  EXPECT_EQ(v.exact, Rational(1, 2));
}

TEST(Strategies, UniformCorrelation) {
  // Oracle: count winning (a,b) pairs per question pair.
  Rational expected = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (oracle::feige_wins(a, b, x, y))
            expected += Rational(1, 4) * Rational(1, 9);
  EXPECT_EQ(expected, Rational(2, 9));
  EXPECT_EQ(eval_correlation(feige(), uniform_correlation(feige())).exact, expected);
}

TEST(Strategies, NsStrategyFeige) {
  Correlation c = ns_strategy_feige();
  EXPECT_EQ(eval_correlation(feige(), c).exact, Rational(2, 3));
  EXPECT_TRUE(is_nonsignalling(c));
  EXPECT_TRUE(is_stochastic(c));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      EXPECT_EQ(c.exact(kBot, x, x, y), Rational(1, 3));
      Rational bob_bot = 0;
      for (int a = 0; a < 3; ++a)
        bob_bot += c.exact(a, kBot, x, y);
      EXPECT_EQ(bob_bot, Rational(1, 3));
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          if (a != y && b != x) {
            EXPECT_EQ(c.exact(a, b, x, y), Rational(1, 3));
          }
    }
}

TEST(Strategies, DeterministicCorrelation) {
  Correlation c = det(feige(), {kBot, kBot}, {0, 0});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          EXPECT_EQ(c.exact(a, b, x, y), Rational(a == kBot && b == 0 ? 1 : 0));
  EXPECT_TRUE(is_stochastic(c));
  EXPECT_TRUE(is_nonsignalling(c));
}

TEST(Strategies, DeterministicMatchesCounting) {
  const Game g = feige();
  for (int f0 = 0; f0 < 3; ++f0)
    for (int f1 = 0; f1 < 3; ++f1)
      for (int g0 = 0; g0 < 3; ++g0)
        for (int g1 = 0; g1 < 3; ++g1) {
          const int f[2] = {f0, f1}, h[2] = {g0, g1};
          Rational count = 0;
          for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
              if (oracle::feige_wins(f[x], h[y], x, y))
                count += Rational(1, 4);
          EXPECT_EQ(eval_correlation(g, det(g, {f0, f1}, {g0, g1})).exact, count);
          EXPECT_EQ(eval_deterministic(g, {{f0, f1}, {g0, g1}}), count);
        }
}

TEST(Strategies, SignallingCounterexample) {
  // Alice's marginal depends on y.
  Correlation c = Correlation::for_game(feige(), Backend::Exact);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      c.exact(y, 0, x, y) = 1;
  EXPECT_TRUE(is_stochastic(c));
  EXPECT_FALSE(is_nonsignalling(c));
}

TEST(Strategies, Synchronicity) {
  const Game g = feige_sync();
  EXPECT_TRUE(is_synchronous(det(g, {1, 3}, {1, 3})));
  EXPECT_FALSE(is_synchronous(uniform_correlation(feige())));
}

TEST(Strategies, OptimalQuantumStrategy) {
  Correlation c = correlation_of_quantum(feige(), feige_optimal_strategy(0.75));
  EXPECT_NEAR(eval_correlation(feige(), c).real, 9.0 / 16.0, 1e-10);
  for (double v : c.real_table())
    EXPECT_GE(v, -1e-10);
  EXPECT_TRUE(is_nonsignalling(c, 1e-10));
}

TEST(Strategies, OptimalStrategyOnSyncGameIsNotSynchronous) {
  // Weight on a != b at equal questions, summed directly.
  Correlation c = correlation_of_quantum(feige(), feige_optimal_strategy(0.75));
  double off = 0;
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b)
          off += c.real(a, b, x, x);
  EXPECT_GT(off, 1e-3);
  EXPECT_FALSE(is_synchronous(c));
}

TEST(Strategies, TrivialQuantumStrategy) {
  QuantumStrategy s = embed_deterministic(feige(), {{kBot, 1}, {0, kBot}});
  Correlation c = correlation_of_quantum(feige(), s);
  Correlation d = det(feige(), {kBot, 1}, {0, kBot});
  for (std::size_t i = 0; i < c.size(); ++i)
    EXPECT_NEAR(c.real_table()[i], d.exact_table()[i].get_d(), 1e-15);
}

TEST(Strategies, NotAStrategy) {
  QuantumStrategy s = feige_optimal_strategy(0.75);
  s.alice[0][0] *= 2.0;
  EXPECT_THROW(correlation_of_quantum(feige(), s), Error);
}

TEST(Strategies, NsStrategyFeige3) {
  const Game g = parallel_repeat(feige(), 3);
  Correlation c = ns_strategy_feige3();
  EXPECT_EQ(eval_correlation(g, c).exact, Rational(1, 3));
  EXPECT_TRUE(is_nonsignalling(c));
  EXPECT_TRUE(is_stochastic(c));
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b)
      for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
          if (c.exact(a, b, x, y) != 0) {
            ASSERT_EQ(oracle::digit(a, 3, 1), kBot);
            ASSERT_EQ(oracle::digit(a, 3, 2), oracle::digit(x, 2, 1));
            ASSERT_EQ(oracle::digit(b, 3, 1), oracle::digit(y, 2, 2));
            ASSERT_EQ(oracle::digit(b, 3, 2), kBot);
          }
}

TEST(Strategies, PairStrategy) {
  for (int m = 1; m <= 2; ++m) {
    const Game g = parallel_repeat(feige(), 2 * m);
    EXPECT_EQ(eval_deterministic(g, classical_pair_strategy(m)), Rational(1, 1 << m));
  }
  // Six rounds exceed the table guard; evaluate round by round instead.
  EXPECT_EQ(round_win_probability(feige(), 6, classical_pair_strategy(3), {0, 1, 2, 3, 4, 5}),
            Rational(1, 8));
}

TEST(Strategies, ThreeStrategy) {
  const Game f = feige();
  const DeterministicStrategy s = classical_three_strategy();
  EXPECT_EQ(eval_deterministic(parallel_repeat(f, 3), s), Rational(5, 16));
  const Rational w1 = round_win_probability(f, 3, s, {0});
  const Rational w12 = round_win_probability(f, 3, s, {0, 1});
  EXPECT_EQ(w1, Rational(1, 2));
  EXPECT_EQ(w12 / w1, Rational(5, 8));
}

TEST(Strategies, ThreeStrategyMatchesDisplayedRule) {
  const DeterministicStrategy s = classical_three_strategy();
  for (int x = 0; x < 8; ++x) {
    const int x1 = x & 1, x3 = (x >> 2) & 1;
    const int a = s.f[x];
    EXPECT_EQ(oracle::digit(a, 3, 0), kBot);
    EXPECT_EQ(oracle::digit(a, 3, 1), x1 | x3);
    EXPECT_EQ(oracle::digit(a, 3, 2), x1 == 0 ? kBot : 1);
  }
  for (int y = 0; y < 8; ++y) {
    const int y2 = (y >> 1) & 1, y3 = (y >> 2) & 1;
    const int b = s.g[y];
    EXPECT_EQ(oracle::digit(b, 3, 0), y2 & y3);
    EXPECT_EQ(oracle::digit(b, 3, 1), kBot);
    EXPECT_EQ(oracle::digit(b, 3, 2), (y2 & y3) == 0 ? y2 : kBot);
  }
}

TEST(Strategies, ProductStrategy) {
  const Game f = feige();
  const Game f2 = parallel_repeat(f, 2);
  const DeterministicStrategy s1{{kBot, kBot}, {0, 0}};
  const DeterministicStrategy s2{{kBot, 0}, {1, kBot}};
  const Game ff = product(f, f);
  EXPECT_EQ(eval_deterministic(ff, product_strategy(f, s1, f, s2)),
            eval_deterministic(f, s1) * eval_deterministic(f, s2));
  // Pair strategy times itself is the m = 2 pair strategy under the same encoding.
  const DeterministicStrategy p = classical_pair_strategy(1);
  EXPECT_EQ(product(f2, f2), parallel_repeat(f, 4));
  EXPECT_EQ(product_strategy(f2, p, f2, p), classical_pair_strategy(2));
  // One-question games.
  const Game one = Game::from_predicate(1, 1, 2, 2, {Rational(1)},
                                        [](int a, int b, int, int) { return a == b; });
  const DeterministicStrategy t{{1}, {1}};
  EXPECT_EQ(product_strategy(one, t, one, t), (DeterministicStrategy{{3}, {3}}));
  EXPECT_THROW(product_strategy(f, {{0}, {0}}, f, s1), Error);
}

TEST(Strategies, EvaluationIsLinear) {
  const Game g = feige();
  Correlation a = ns_strategy_feige(), b = uniform_correlation(g);
  Correlation mix = Correlation::for_game(g, Backend::Exact);
  const Rational t(2, 7);
  for (std::size_t i = 0; i < mix.size(); ++i)
    mix.exact_table()[i] = t * a.exact_table()[i] + (1 - t) * b.exact_table()[i];
  EXPECT_EQ(eval_correlation(g, mix).exact,
            t * eval_correlation(g, a).exact + (1 - t) * eval_correlation(g, b).exact);
}

TEST(Strategies, FamilyMatchesFormulaOnGrid) {
  for (int k = 0; k <= 10; ++k) {
    const double p = k / 10.0;
    const double expected = p * (2 - p + 2 * std::sqrt(1 - p)) / 3;
    Correlation c = correlation_of_quantum(feige(), feige_optimal_strategy(p));
    EXPECT_NEAR(eval_correlation(feige(), c).real, expected, 1e-10) << p;
  }
}

} // namespace
