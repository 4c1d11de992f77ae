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


// Test-side reference computations, written independently of the library.

#ifndef NLG_TESTS_ORACLES_HPP
#define NLG_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "nlg/nlg.hpp"

namespace oracle {

using nlg::Rational;

inline constexpr int kBot = 2;

/// Feige's predicate spelled out: exactly one player says bot, the other names
/// the bot-sayer's question.
inline bool feige_wins(int a, int b, int x, int y) {
  return (a == kBot && b == x) || (b == kBot && a == y);
}

/// Digit i of a little-endian base-r tuple.
inline int digit(long idx, int radix, int i) {
  for (int k = 0; k < i; ++k)
    idx /= radix;
  return static_cast<int>(idx % radix);
}

/// Repetition predicate from the per-coordinate definition.
inline bool feige_n_wins(int n, long a, long b, long x, long y) {
  for (int i = 0; i < n; ++i)
    if (!feige_wins(digit(a, 3, i), digit(b, 3, i), digit(x, 2, i), digit(y, 2, i)))
      return false;
  return true;
}

/// Max over all pairs (f, g) by plain enumeration; tiny games only.
inline Rational brute_classical(const nlg::Game &g) {
  const int X = g.x_size(), Y = g.y_size(), A = g.a_size(), B = g.b_size();
  long fa = 1, gb = 1;
  for (int i = 0; i < X; ++i)
    fa *= A;
  for (int i = 0; i < Y; ++i)
    gb *= B;
  Rational best = -1;
  for (long f = 0; f < fa; ++f)
    for (long h = 0; h < gb; ++h) {
      Rational v = 0;
      for (int x = 0; x < X; ++x)
        for (int y = 0; y < Y; ++y)
          if (g.wins(digit(f, A, x), digit(h, B, y), x, y))
            v += g.prior(x, y);
      if (v > best)
        best = v;
    }
  return best;
}

/// Golden-section maximization of a unimodal function on [lo, hi].
inline double golden_argmax(const std::function<double(double)> &f, double lo, double hi,
                            double tol = 1e-12) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double c = hi - r * (hi - lo), d = lo + r * (hi - lo);
  while (hi - lo > tol) {
    const double fc = f(c), fd = f(d);
    // Equal values bracket the maximum from both sides; near a flat top this
    // keeps the interval centred instead of drifting with rounding.
    if (fc > fd) {
      hi = d;
    } else if (fc < fd) {
      lo = c;
    } else {
      lo = c;
      hi = d;
    }
    c = hi - r * (hi - lo);
    d = lo + r * (hi - lo);
  }
  return (lo + hi) / 2;
}

/// Random game with the given sizes: prior with small integer weights, predicate
/// true with probability 1/2.
template <class Rng> nlg::Game random_game(int X, int Y, int A, int B, Rng &rng) {
  std::uniform_int_distribution<int> w(1, 4), coin(0, 1);
  std::vector<Rational> prior(X * Y);
  Rational total = 0;
  for (auto &p : prior) {
    p = w(rng);
    total += p;
  }
  for (auto &p : prior)
    p /= total;
  std::vector<std::uint8_t> pred(static_cast<std::size_t>(X) * Y * A * B);
  for (auto &v : pred)
    v = static_cast<std::uint8_t>(coin(rng));
  return nlg::Game(X, Y, A, B, std::move(prior), std::move(pred));
}

} // namespace oracle

#endif // NLG_TESTS_ORACLES_HPP
