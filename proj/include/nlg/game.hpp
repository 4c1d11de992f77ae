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

#ifndef NLG_GAME_HPP
#define NLG_GAME_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlg/error.hpp"
#include "nlg/rational.hpp"

namespace nlg {

/// Index of answer "⊥" in feige() and its repetitions.
inline constexpr int kBot = 2;

/// Default bound on the number of predicate entries a constructor may create.
inline constexpr std::int64_t kDefaultTableLimit = 100000000;

struct Labels {
  std::vector<std::string> x, y, a, b;
};

/// Two-player game with exact prior.
///
/// Flat layouts:
///   prior      [x * y_size + y]
///   predicate  [((a * b_size + b) * x_size + x) * y_size + y]
/// Tuples produced by products/repetitions are little-endian mixed radix:
/// coordinate 0 is the least significant digit.
class Game {
public:
  Game() = default;
  Game(int x_size, int y_size, int a_size, int b_size, std::vector<Rational> prior,
       std::vector<std::uint8_t> predicate, Labels labels = {})
      : x_size_(x_size), y_size_(y_size), a_size_(a_size), b_size_(b_size),
        prior_(std::move(prior)), predicate_(std::move(predicate)), labels_(std::move(labels)) {}

  template <class Pred>
  static Game from_predicate(int x_size, int y_size, int a_size, int b_size,
                             std::vector<Rational> prior, Pred &&pred, Labels labels = {}) {
    std::vector<std::uint8_t> table(static_cast<std::size_t>(a_size) * b_size * x_size * y_size);
    for (int a = 0; a < a_size; ++a)
      for (int b = 0; b < b_size; ++b)
        for (int x = 0; x < x_size; ++x)
          for (int y = 0; y < y_size; ++y)
            table[((static_cast<std::size_t>(a) * b_size + b) * x_size + x) * y_size + y] =
                pred(a, b, x, y) ? 1 : 0;
    return Game(x_size, y_size, a_size, b_size, std::move(prior), std::move(table),
                std::move(labels));
  }

  static std::vector<Rational> uniform_prior(int x_size, int y_size) {
    return std::vector<Rational>(static_cast<std::size_t>(x_size) * y_size,
                                 Rational(1, x_size * y_size));
  }

  int x_size() const { return x_size_; }
  int y_size() const { return y_size_; }
  int a_size() const { return a_size_; }
  int b_size() const { return b_size_; }

  std::size_t index(int a, int b, int x, int y) const {
    return ((static_cast<std::size_t>(a) * b_size_ + b) * x_size_ + x) * y_size_ + y;
  }
  std::size_t table_size() const {
    return static_cast<std::size_t>(a_size_) * b_size_ * x_size_ * y_size_;
  }

  const Rational &prior(int x, int y) const {
    return prior_[static_cast<std::size_t>(x) * y_size_ + y];
  }
  bool wins(int a, int b, int x, int y) const { return predicate_[index(a, b, x, y)] != 0; }

  const std::vector<Rational> &prior_table() const { return prior_; }
  const std::vector<std::uint8_t> &predicate_table() const { return predicate_; }
  const Labels &labels() const { return labels_; }

  bool operator==(const Game &o) const {
    return x_size_ == o.x_size_ && y_size_ == o.y_size_ && a_size_ == o.a_size_ &&
           b_size_ == o.b_size_ && prior_ == o.prior_ && predicate_ == o.predicate_;
  }

private:
  int x_size_ = 0, y_size_ = 0, a_size_ = 0, b_size_ = 0;
  std::vector<Rational> prior_;
  std::vector<std::uint8_t> predicate_;
  Labels labels_;
};

struct Status {
  bool ok = true;
  Errc code = Errc::InvalidArgument;
  std::string message;
  explicit operator bool() const { return ok; }
};

inline Status validate(const Game &g) {
  if (g.x_size() <= 0 || g.y_size() <= 0 || g.a_size() <= 0 || g.b_size() <= 0)
    return {false, Errc::ShapeMismatch, "set sizes must be positive"};
  if (g.prior_table().size() != static_cast<std::size_t>(g.x_size()) * g.y_size())
    return {false, Errc::ShapeMismatch, "prior table has wrong length"};
  if (g.predicate_table().size() != g.table_size())
    return {false, Errc::ShapeMismatch, "predicate table has wrong length"};
  Rational total = 0;
  for (const Rational &p : g.prior_table()) {
    if (p < 0)
      return {false, Errc::NonstochasticPrior, "negative prior entry"};
    total += p;
  }
  if (total != 1)
    return {false, Errc::NonstochasticPrior, "prior sums to " + to_string(total)};
  return {};
}

inline void require_valid(const Game &g) {
  Status s = validate(g);
  if (!s)
    fail(s.code, s.message);
}

// Mixed-radix helpers. Digit 0 is the least significant.
inline std::vector<int> decode_tuple(std::int64_t index, int radix, int length) {
  std::vector<int> d(length);
  for (int i = 0; i < length; ++i) {
    d[i] = static_cast<int>(index % radix);
    index /= radix;
  }
  return d;
}

inline std::int64_t encode_tuple(const std::vector<int> &digits, int radix) {
  std::int64_t v = 0;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i)
    v = v * radix + digits[i];
  return v;
}

inline std::int64_t int_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i)
    r *= base;
  return r;
}

inline Game feige() {
  Labels labels{{"0", "1"}, {"0", "1"}, {"0", "1", "bot"}, {"0", "1", "bot"}};
  return Game::from_predicate(
      2, 2, 3, 3, Game::uniform_prior(2, 2),
      [](int a, int b, int x, int y) { return (a == kBot && b == x) || (a == y && b == kBot); },
      labels);
}

/// Answers 0..3 stand for A0, A1, B0, B1.
inline Game feige_sync() {
  Labels labels{{"0", "1"}, {"0", "1"}, {"A0", "A1", "B0", "B1"}, {"A0", "A1", "B0", "B1"}};
  return Game::from_predicate(
      2, 2, 4, 4, Game::uniform_prior(2, 2),
      [](int a, int b, int x, int y) { return (a == x && b == x) || (a == 2 + y && b == 2 + y); },
      labels);
}

inline Game chsh() {
  return Game::from_predicate(2, 2, 2, 2, Game::uniform_prior(2, 2),
                              [](int a, int b, int x, int y) { return (a ^ b) == (x & y); });
}

/// G1: Alice guesses Bob's bit. G2: Bob guesses Alice's bit.
inline std::pair<Game, Game> guessing_components() {
  Game g1 = Game::from_predicate(
      1, 2, 2, 1, Game::uniform_prior(1, 2),
      [](int a, int, int, int y) { return a == y; },
      Labels{{"*"}, {"0", "1"}, {"0", "1"}, {"bot"}});
  Game g2 = Game::from_predicate(
      2, 1, 1, 2, Game::uniform_prior(2, 1),
      [](int, int b, int x, int) { return b == x; },
      Labels{{"0", "1"}, {"*"}, {"bot"}, {"0", "1"}});
  return {g1, g2};
}

inline void check_table_size(long double entries, std::int64_t limit) {
  if (entries > static_cast<long double>(limit))
    fail(Errc::OverflowGuard, "predicate table would have " +
                                  std::to_string(static_cast<double>(entries)) +
                                  " entries (limit " + std::to_string(limit) + ")");
}

/// Product game G x H. Question (xg, xh) is encoded xg + |Xg| * xh, same for
/// answers, so coordinate 0 (the first game) is least significant.
inline Game product(const Game &g, const Game &h, std::int64_t limit = kDefaultTableLimit) {
  const int X = g.x_size() * h.x_size(), Y = g.y_size() * h.y_size();
  const int A = g.a_size() * h.a_size(), B = g.b_size() * h.b_size();
  check_table_size(static_cast<long double>(X) * Y * A * B, limit);
  std::vector<Rational> prior(static_cast<std::size_t>(X) * Y);
  for (int x = 0; x < X; ++x)
    for (int y = 0; y < Y; ++y)
      prior[static_cast<std::size_t>(x) * Y + y] =
          g.prior(x % g.x_size(), y % g.y_size()) * h.prior(x / g.x_size(), y / g.y_size());
  std::vector<std::uint8_t> pred(static_cast<std::size_t>(X) * Y * A * B);
  std::size_t i = 0;
  for (int a = 0; a < A; ++a)
    for (int b = 0; b < B; ++b)
      for (int x = 0; x < X; ++x)
        for (int y = 0; y < Y; ++y)
          pred[i++] = g.wins(a % g.a_size(), b % g.b_size(), x % g.x_size(), y % g.y_size()) &&
                      h.wins(a / g.a_size(), b / g.b_size(), x / g.x_size(), y / g.y_size());
  return Game(X, Y, A, B, std::move(prior), std::move(pred));
}

inline Game parallel_repeat(const Game &g, int n, std::int64_t limit = kDefaultTableLimit) {
  if (n < 1)
    fail(Errc::InvalidArgument, "repetition count must be >= 1");
  long double entries = 1;
  for (int i = 0; i < n; ++i)
    entries *= static_cast<long double>(g.table_size());
  check_table_size(entries, limit);
  Game r = g;
  for (int i = 1; i < n; ++i)
    r = product(r, g, limit);
  if (n == 1)
    return g;
  return r;
}

/// Or-composition. Questions are pairs encoded x1 + |X1| * x2 (likewise y).
/// Answers are the disjoint union with game 1's block first:
/// a in [0, |A1|) belongs to game 1, a in [|A1|, |A1|+|A2|) to game 2.
/// General priors are accepted; the prior is the product pi1 * pi2.
inline Game or_game(const Game &g1, const Game &g2) {
  const int X = g1.x_size() * g2.x_size(), Y = g1.y_size() * g2.y_size();
  const int A = g1.a_size() + g2.a_size(), B = g1.b_size() + g2.b_size();
  std::vector<Rational> prior(static_cast<std::size_t>(X) * Y);
  for (int x = 0; x < X; ++x)
    for (int y = 0; y < Y; ++y)
      prior[static_cast<std::size_t>(x) * Y + y] =
          g1.prior(x % g1.x_size(), y % g1.y_size()) * g2.prior(x / g1.x_size(), y / g1.y_size());
  return Game::from_predicate(X, Y, A, B, std::move(prior), [&](int a, int b, int x, int y) {
    int x1 = x % g1.x_size(), x2 = x / g1.x_size();
    int y1 = y % g1.y_size(), y2 = y / g1.y_size();
    if (a < g1.a_size() && b < g1.b_size())
      return g1.wins(a, b, x1, y1);
    if (a >= g1.a_size() && b >= g1.b_size())
      return g2.wins(a - g1.a_size(), b - g1.b_size(), x2, y2);
    return false;
  });
}

/// Maps indices of a source game to indices of a target game.
struct Relabeling {
  std::vector<int> x, y, a, b;

  Relabeling inverse() const {
    auto inv = [](const std::vector<int> &p) {
      std::vector<int> q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i)
        q[p[i]] = static_cast<int>(i);
      return q;
    };
    return {inv(x), inv(y), inv(a), inv(b)};
  }

  static Relabeling identity(const Game &g) {
    auto iota = [](int n) {
      std::vector<int> v(n);
      std::iota(v.begin(), v.end(), 0);
      return v;
    };
    return {iota(g.x_size()), iota(g.y_size()), iota(g.a_size()), iota(g.b_size())};
  }

  bool operator==(const Relabeling &) const = default;
};

inline bool is_permutation_of_range(const std::vector<int> &p, int n) {
  if (static_cast<int>(p.size()) != n)
    return false;
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v])
      return false;
    seen[v] = 1;
  }
  return true;
}

/// The game h with h(s(a), s(b) | s(x), s(y)) = g(a, b | x, y).
inline Game relabel(const Game &g, const Relabeling &s) {
  if (!is_permutation_of_range(s.x, g.x_size()) || !is_permutation_of_range(s.y, g.y_size()) ||
      !is_permutation_of_range(s.a, g.a_size()) || !is_permutation_of_range(s.b, g.b_size()))
    fail(Errc::ShapeMismatch, "relabeling arrays are not permutations of the index ranges");
  std::vector<Rational> prior(g.prior_table().size());
  for (int x = 0; x < g.x_size(); ++x)
    for (int y = 0; y < g.y_size(); ++y)
      prior[static_cast<std::size_t>(s.x[x]) * g.y_size() + s.y[y]] = g.prior(x, y);
  Game shell(g.x_size(), g.y_size(), g.a_size(), g.b_size(), {}, {});
  std::vector<std::uint8_t> pred(g.table_size());
  for (int a = 0; a < g.a_size(); ++a)
    for (int b = 0; b < g.b_size(); ++b)
      for (int x = 0; x < g.x_size(); ++x)
        for (int y = 0; y < g.y_size(); ++y)
          pred[shell.index(s.a[a], s.b[b], s.x[x], s.y[y])] = g.wins(a, b, x, y);
  return Game(g.x_size(), g.y_size(), g.a_size(), g.b_size(), std::move(prior), std::move(pred));
}

/// True iff s maps g onto h exactly (priors and predicates).
inline bool verifies(const Game &g, const Game &h, const Relabeling &s) {
  if (g.x_size() != h.x_size() || g.y_size() != h.y_size() || g.a_size() != h.a_size() ||
      g.b_size() != h.b_size())
    return false;
  if (!is_permutation_of_range(s.x, g.x_size()) || !is_permutation_of_range(s.y, g.y_size()) ||
      !is_permutation_of_range(s.a, g.a_size()) || !is_permutation_of_range(s.b, g.b_size()))
    return false;
  for (int x = 0; x < g.x_size(); ++x)
    for (int y = 0; y < g.y_size(); ++y)
      if (g.prior(x, y) != h.prior(s.x[x], s.y[y]))
        return false;
  for (int a = 0; a < g.a_size(); ++a)
    for (int b = 0; b < g.b_size(); ++b)
      for (int x = 0; x < g.x_size(); ++x)
        for (int y = 0; y < g.y_size(); ++y)
          if (g.wins(a, b, x, y) != h.wins(s.a[a], s.b[b], s.x[x], s.y[y]))
            return false;
  return true;
}

namespace detail {

inline constexpr int kMaxIsoSize = 8;

template <class Visit>
bool for_each_relabeling(const Game &g, const Game &h, Visit &&visit) {
  auto iota = [](int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
  };
  Relabeling s{iota(g.x_size()), iota(g.y_size()), iota(g.a_size()), iota(g.b_size())};
  do {
    do {
      bool prior_ok = true;
      for (int x = 0; x < g.x_size() && prior_ok; ++x)
        for (int y = 0; y < g.y_size() && prior_ok; ++y)
          prior_ok = g.prior(x, y) == h.prior(s.x[x], s.y[y]);
      if (!prior_ok)
        continue;
      std::sort(s.a.begin(), s.a.end());
      do {
        std::sort(s.b.begin(), s.b.end());
        do {
          bool ok = true;
          for (int a = 0; a < g.a_size() && ok; ++a)
            for (int b = 0; b < g.b_size() && ok; ++b)
              for (int x = 0; x < g.x_size() && ok; ++x)
                for (int y = 0; y < g.y_size() && ok; ++y)
                  ok = g.wins(a, b, x, y) == h.wins(s.a[a], s.b[b], s.x[x], s.y[y]);
          if (ok && visit(s))
            return true;
        } while (std::next_permutation(s.b.begin(), s.b.end()));
      } while (std::next_permutation(s.a.begin(), s.a.end()));
    } while (std::next_permutation(s.y.begin(), s.y.end()));
  } while (std::next_permutation(s.x.begin(), s.x.end()));
  return false;
}

inline void check_iso_sizes(const Game &g) {
  if (std::max({g.x_size(), g.y_size(), g.a_size(), g.b_size()}) > kMaxIsoSize)
    fail(Errc::SizeBudget, "exhaustive relabeling search is limited to sets of size <= 8");
}

} // namespace detail

/// Exhaustive search over all bijections; first hit in lexicographic order.
inline std::optional<Relabeling> find_isomorphism(const Game &g, const Game &h) {
  if (g.x_size() != h.x_size() || g.y_size() != h.y_size() || g.a_size() != h.a_size() ||
      g.b_size() != h.b_size())
    return std::nullopt;
  detail::check_iso_sizes(g);
  std::optional<Relabeling> found;
  detail::for_each_relabeling(g, h, [&](const Relabeling &s) {
    found = s;
    return true;
  });
  return found;
}

/// All relabelings mapping g onto itself.
inline std::vector<Relabeling> automorphisms(const Game &g) {
  detail::check_iso_sizes(g);
  std::vector<Relabeling> out;
  detail::for_each_relabeling(g, g, [&](const Relabeling &s) {
    out.push_back(s);
    return false;
  });
  return out;
}

/// Generators of a subgroup of Aut(g^n): every automorphism of g applied in
/// one coordinate, and every adjacent transposition of coordinates.
inline std::vector<Relabeling> repetition_symmetries(const Game &g, int n) {
  const std::int64_t X = int_pow(g.x_size(), n), Y = int_pow(g.y_size(), n);
  const std::int64_t A = int_pow(g.a_size(), n), B = int_pow(g.b_size(), n);
  auto lift = [n](std::int64_t size, int radix, auto &&digit_map) {
    std::vector<int> out(size);
    for (std::int64_t i = 0; i < size; ++i) {
      std::vector<int> d = decode_tuple(i, radix, n);
      digit_map(d);
      out[i] = static_cast<int>(encode_tuple(d, radix));
    }
    return out;
  };
  std::vector<Relabeling> gens;
  for (const Relabeling &s : automorphisms(g)) {
    if (s == Relabeling::identity(g))
      continue;
    for (int c = 0; c < n; ++c) {
      auto at = [c](const std::vector<int> &p) {
        return [c, &p](std::vector<int> &d) { d[c] = p[d[c]]; };
      };
      gens.push_back({lift(X, g.x_size(), at(s.x)), lift(Y, g.y_size(), at(s.y)),
                      lift(A, g.a_size(), at(s.a)), lift(B, g.b_size(), at(s.b))});
    }
  }
  for (int c = 0; c + 1 < n; ++c) {
    auto swap = [c](std::vector<int> &d) { std::swap(d[c], d[c + 1]); };
    gens.push_back({lift(X, g.x_size(), swap), lift(Y, g.y_size(), swap),
                    lift(A, g.a_size(), swap), lift(B, g.b_size(), swap)});
  }
  return gens;
}

} // namespace nlg

#endif // NLG_GAME_HPP
