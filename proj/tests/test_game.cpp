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

Errc code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidArgument;
}

TEST(Game, FeigeValidates) { EXPECT_TRUE(validate(feige()).ok); }

TEST(Game, NonstochasticPrior) {
  std::vector<Rational> prior(4, Rational(3, 16));
  Game g(2, 2, 3, 3, prior, feige().predicate_table());
  EXPECT_EQ(validate(g).code, Errc::NonstochasticPrior);
  EXPECT_EQ(code_of([&] { require_valid(g); }), Errc::NonstochasticPrior);
}

TEST(Game, PredicateLengthMismatch) {
  std::vector<std::uint8_t> pred(35, 0);
  Game g(2, 2, 3, 3, Game::uniform_prior(2, 2), pred);
  EXPECT_EQ(validate(g).code, Errc::ShapeMismatch);
}

TEST(Game, FeigePredicate) {
  Game g = feige();
  EXPECT_TRUE(g.wins(kBot, 0, 0, 0));
  EXPECT_TRUE(g.wins(0, kBot, 1, 0));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      EXPECT_FALSE(g.wins(kBot, kBot, x, y));
      EXPECT_EQ(g.prior(x, y), Rational(1, 4));
    }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          EXPECT_EQ(g.wins(a, b, x, y), oracle::feige_wins(a, b, x, y));
}

TEST(Game, FeigeSync) {
  Game g = feige_sync();
  ASSERT_EQ(g.a_size(), 4);
  EXPECT_TRUE(validate(g).ok);
  for (int y = 0; y < 2; ++y)
    EXPECT_TRUE(g.wins(0, 0, 0, y)); // A0 A0
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      EXPECT_FALSE(g.wins(0, 1, x, y)); // A0 A1
  // Same question, different answers never wins.
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (a != b) {
          EXPECT_FALSE(g.wins(a, b, x, x)) << a << b << x;
        }
}

TEST(Game, GuessingComponents) {
  auto [g1, g2] = guessing_components();
  EXPECT_EQ(g1.x_size(), 1);
  EXPECT_EQ(g1.y_size(), 2);
  EXPECT_EQ(g1.a_size(), 2);
  EXPECT_EQ(g1.b_size(), 1);
  EXPECT_TRUE(g1.wins(1, 0, 0, 1));
  EXPECT_FALSE(g2.wins(0, 0, 1, 0));
  for (const Game *g : {&g1, &g2})
    for (const Rational &p : g->prior_table())
      EXPECT_EQ(p, Rational(1, 2));
}

TEST(Game, ParallelRepeatOne) { EXPECT_EQ(parallel_repeat(feige(), 1), feige()); }

TEST(Game, ParallelRepeatSizes) {
  Game g = parallel_repeat(feige(), 3);
  EXPECT_EQ(g.x_size(), 8);
  EXPECT_EQ(g.a_size(), 27);
  EXPECT_EQ(g.prior(5, 3), Rational(1, 64));
}

TEST(Game, ParallelRepeatMatchesCoordinatewise) {
  for (int n = 2; n <= 3; ++n) {
    Game g = parallel_repeat(feige(), n);
    for (int a = 0; a < g.a_size(); ++a)
      for (int b = 0; b < g.b_size(); ++b)
        for (int x = 0; x < g.x_size(); ++x)
          for (int y = 0; y < g.y_size(); ++y)
            ASSERT_EQ(g.wins(a, b, x, y), oracle::feige_n_wins(n, a, b, x, y));
  }
}

TEST(Game, PairStrategyWinsIffX1EqualsY2) {
  Game g = parallel_repeat(feige(), 2);
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2)
      for (int y1 = 0; y1 < 2; ++y1)
        for (int y2 = 0; y2 < 2; ++y2) {
          const int a = kBot + 3 * x1; // (bot, x1)
          const int b = y2 + 3 * kBot; // (y2, bot)
          EXPECT_EQ(g.wins(a, b, x1 + 2 * x2, y1 + 2 * y2), x1 == y2);
        }
}

TEST(Game, RepeatIsProductOfRepeats) {
  const Game f = feige();
  EXPECT_EQ(parallel_repeat(f, 2), product(f, f));
  EXPECT_EQ(parallel_repeat(f, 3), product(parallel_repeat(f, 2), f));
  EXPECT_EQ(parallel_repeat(f, 3), product(f, parallel_repeat(f, 2)));
}

TEST(Game, OverflowGuard) {
  EXPECT_EQ(code_of([] { parallel_repeat(feige(), 8); }), Errc::OverflowGuard);
  EXPECT_EQ(code_of([] { parallel_repeat(feige(), 0); }), Errc::InvalidArgument);
}

TEST(Game, OrGame) {
  auto [g1, g2] = guessing_components();
  Game og = or_game(g1, g2);
  EXPECT_EQ(og.a_size(), g1.a_size() + g2.a_size());
  EXPECT_TRUE(validate(og).ok);
  // Alice in game 1, Bob in game 2.
  for (int a = 0; a < g1.a_size(); ++a)
    for (int b = g1.b_size(); b < og.b_size(); ++b)
      for (int x = 0; x < og.x_size(); ++x)
        for (int y = 0; y < og.y_size(); ++y)
          EXPECT_FALSE(og.wins(a, b, x, y));
  for (int x = 0; x < og.x_size(); ++x)
    for (int y = 0; y < og.y_size(); ++y)
      EXPECT_EQ(og.prior(x, y), g1.prior(x % g1.x_size(), y % g1.y_size()) *
                                    g2.prior(x / g1.x_size(), y / g1.y_size()));
  auto iso = find_isomorphism(og, feige());
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(relabel(og, *iso), feige());
}

TEST(Game, IsomorphismBasics) {
  auto id = find_isomorphism(feige(), feige());
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(*id, Relabeling::identity(feige()));
  EXPECT_FALSE(find_isomorphism(feige(), feige_sync()).has_value());
}

TEST(Game, IsomorphismIsSymmetric) {
  auto [g1, g2] = guessing_components();
  Game og = or_game(g1, g2);
  auto s = find_isomorphism(og, feige());
  ASSERT_TRUE(s);
  EXPECT_TRUE(verifies(feige(), og, s->inverse()));
  EXPECT_TRUE(find_isomorphism(feige(), og).has_value());
}

TEST(Game, RepetitionSymmetriesFixTheGame) {
  Game g = parallel_repeat(feige(), 2);
  for (const Relabeling &s : repetition_symmetries(feige(), 2))
    EXPECT_TRUE(verifies(g, g, s));
}

} // namespace
