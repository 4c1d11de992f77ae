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

#ifndef NLG_STRATEGIES_HPP
#define NLG_STRATEGIES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nlg/game.hpp"

namespace nlg {

enum class Backend { Exact, Float };

inline constexpr double kStrategyTol = 1e-10;
inline constexpr double kNormTol = 1e-12;

/// A value that is either an exact rational or a double.
struct Value {
  Backend backend = Backend::Exact;
  Rational exact = 0;
  double real = 0.0;

  static Value of(Rational r) { return {Backend::Exact, std::move(r), 0.0}; }
  static Value of(double d) { return {Backend::Float, 0, d}; }
  bool is_exact() const { return backend == Backend::Exact; }
  double to_double() const { return is_exact() ? exact.get_d() : real; }
};

/// Dense table p(a,b|x,y) in the predicate layout of Game.
class Correlation {
public:
  Correlation() = default;
  Correlation(int x_size, int y_size, int a_size, int b_size, Backend backend)
      : x_(x_size), y_(y_size), a_(a_size), b_(b_size), backend_(backend) {
    std::size_t n = static_cast<std::size_t>(a_) * b_ * x_ * y_;
    if (backend == Backend::Exact)
      exact_.assign(n, Rational(0));
    else
      real_.assign(n, 0.0);
  }
  static Correlation for_game(const Game &g, Backend backend) {
    return Correlation(g.x_size(), g.y_size(), g.a_size(), g.b_size(), backend);
  }

  int x_size() const { return x_; }
  int y_size() const { return y_; }
  int a_size() const { return a_; }
  int b_size() const { return b_; }
  Backend backend() const { return backend_; }
  std::size_t size() const { return static_cast<std::size_t>(a_) * b_ * x_ * y_; }
  std::size_t index(int a, int b, int x, int y) const {
    return ((static_cast<std::size_t>(a) * b_ + b) * x_ + x) * y_ + y;
  }

  Rational &exact(int a, int b, int x, int y) { return exact_[index(a, b, x, y)]; }
  const Rational &exact(int a, int b, int x, int y) const { return exact_[index(a, b, x, y)]; }
  double &real(int a, int b, int x, int y) { return real_[index(a, b, x, y)]; }
  double real(int a, int b, int x, int y) const { return real_[index(a, b, x, y)]; }
  double as_double(int a, int b, int x, int y) const {
    return backend_ == Backend::Exact ? exact_[index(a, b, x, y)].get_d()
                                      : real_[index(a, b, x, y)];
  }

  std::vector<Rational> &exact_table() { return exact_; }
  const std::vector<Rational> &exact_table() const { return exact_; }
  std::vector<double> &real_table() { return real_; }
  const std::vector<double> &real_table() const { return real_; }

  bool matches(const Game &g) const {
    return x_ == g.x_size() && y_ == g.y_size() && a_ == g.a_size() && b_ == g.b_size();
  }

private:
  int x_ = 0, y_ = 0, a_ = 0, b_ = 0;
  Backend backend_ = Backend::Exact;
  std::vector<Rational> exact_;
  std::vector<double> real_;
};

struct DeterministicStrategy {
  std::vector<int> f; // Alice: question -> answer
  std::vector<int> g; // Bob
  bool operator==(const DeterministicStrategy &) const = default;
};

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Projective strategy. The state is indexed i * dim_b + j.
struct QuantumStrategy {
  int dim_a = 1, dim_b = 1;
  CVector state;
  std::vector<std::vector<CMatrix>> alice; // [x][a]
  std::vector<std::vector<CMatrix>> bob;   // [y][b]
};

inline CMatrix kron(const CMatrix &a, const CMatrix &b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Value eval_correlation(const Game &game, const Correlation &c) {
  if (!c.matches(game))
    fail(Errc::ShapeMismatch, "correlation shape does not match the game");
  if (c.backend() == Backend::Exact) {
    Rational total = 0;
    for (int x = 0; x < game.x_size(); ++x)
      for (int y = 0; y < game.y_size(); ++y) {
        Rational w = 0;
        for (int a = 0; a < game.a_size(); ++a)
          for (int b = 0; b < game.b_size(); ++b)
            if (game.wins(a, b, x, y))
              w += c.exact(a, b, x, y);
        total += game.prior(x, y) * w;
      }
    return Value::of(total);
  }
  double total = 0;
  for (int x = 0; x < game.x_size(); ++x)
    for (int y = 0; y < game.y_size(); ++y) {
      double w = 0;
      for (int a = 0; a < game.a_size(); ++a)
        for (int b = 0; b < game.b_size(); ++b)
          if (game.wins(a, b, x, y))
            w += c.real(a, b, x, y);
      total += game.prior(x, y).get_d() * w;
    }
  return Value::of(total);
}

inline void check_deterministic(const Game &game, const DeterministicStrategy &s) {
  if (static_cast<int>(s.f.size()) != game.x_size() ||
      static_cast<int>(s.g.size()) != game.y_size())
    fail(Errc::ShapeMismatch, "strategy arrays do not match question counts");
  for (int a : s.f)
    if (a < 0 || a >= game.a_size())
      fail(Errc::ShapeMismatch, "Alice answer out of range");
  for (int b : s.g)
    if (b < 0 || b >= game.b_size())
      fail(Errc::ShapeMismatch, "Bob answer out of range");
}

inline Correlation correlation_of_deterministic(const Game &game, const DeterministicStrategy &s) {
  check_deterministic(game, s);
  Correlation c = Correlation::for_game(game, Backend::Exact);
  for (int x = 0; x < game.x_size(); ++x)
    for (int y = 0; y < game.y_size(); ++y)
      c.exact(s.f[x], s.g[y], x, y) = 1;
  return c;
}

/// Direct evaluation without materializing the correlation.
inline Rational eval_deterministic(const Game &game, const DeterministicStrategy &s) {
  check_deterministic(game, s);
  Rational total = 0;
  for (int x = 0; x < game.x_size(); ++x)
    for (int y = 0; y < game.y_size(); ++y)
      if (game.wins(s.f[x], s.g[y], x, y))
        total += game.prior(x, y);
  return total;
}

namespace detail {

inline bool is_projection(const CMatrix &p, double tol) {
  return (p - p.adjoint()).cwiseAbs().maxCoeff() <= tol && (p * p - p).cwiseAbs().maxCoeff() <= tol;
}

inline void check_pvms(const std::vector<std::vector<CMatrix>> &pvms, int questions, int answers,
                       int dim, const char *who) {
  if (static_cast<int>(pvms.size()) != questions)
    fail(Errc::NotAStrategy, std::string(who) + ": wrong number of measurements");
  for (const auto &m : pvms) {
    if (static_cast<int>(m.size()) != answers)
      fail(Errc::NotAStrategy, std::string(who) + ": wrong number of outcomes");
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (const CMatrix &p : m) {
      if (p.rows() != dim || p.cols() != dim)
        fail(Errc::NotAStrategy, std::string(who) + ": operator has wrong dimension");
      if (!is_projection(p, kStrategyTol))
        fail(Errc::NotAStrategy, std::string(who) + ": element is not an orthogonal projection");
      sum += p;
    }
    if ((sum - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > kStrategyTol)
      fail(Errc::NotAStrategy, std::string(who) + ": elements do not sum to the identity");
  }
}

} // namespace detail

inline void check_quantum(const Game &game, const QuantumStrategy &s) {
  if (s.dim_a < 1 || s.dim_b < 1 || s.state.size() != s.dim_a * s.dim_b)
    fail(Errc::NotAStrategy, "state length does not match dimensions");
  if (std::abs(s.state.norm() - 1.0) > kNormTol)
    fail(Errc::NotAStrategy, "state is not a unit vector");
  detail::check_pvms(s.alice, game.x_size(), game.a_size(), s.dim_a, "Alice");
  detail::check_pvms(s.bob, game.y_size(), game.b_size(), s.dim_b, "Bob");
}

/// p(a,b|x,y) = <psi| P^x_a (x) Q^y_b |psi>.
inline Correlation correlation_of_quantum(const Game &game, const QuantumStrategy &s) {
  check_quantum(game, s);
  // psi = sum_ij M(i,j) |i>|j>, so <psi|P (x) Q|psi> = tr(M^* P M Q^T).
  CMatrix m(s.dim_a, s.dim_b);
  for (int i = 0; i < s.dim_a; ++i)
    for (int j = 0; j < s.dim_b; ++j)
      m(i, j) = s.state(i * s.dim_b + j);
  Correlation c = Correlation::for_game(game, Backend::Float);
  for (int x = 0; x < game.x_size(); ++x)
    for (int a = 0; a < game.a_size(); ++a) {
      CMatrix left = m.adjoint() * s.alice[x][a] * m;
      for (int y = 0; y < game.y_size(); ++y)
        for (int b = 0; b < game.b_size(); ++b) {
          std::complex<double> v = (left * s.bob[y][b].transpose()).trace();
          if (std::abs(v.imag()) > kStrategyTol)
            fail(Errc::NotAStrategy, "probability with non-negligible imaginary part");
          c.real(a, b, x, y) = v.real();
        }
    }
  return c;
}

inline bool is_nonsignalling(const Correlation &c, double tol = kStrategyTol) {
  const bool exact = c.backend() == Backend::Exact;
  auto close = [&](const Rational &r1, const Rational &r2, double d1, double d2) {
    return exact ? r1 == r2 : std::abs(d1 - d2) <= tol;
  };
  // Bob's marginal independent of x.
  for (int y = 0; y < c.y_size(); ++y)
    for (int b = 0; b < c.b_size(); ++b) {
      Rational r0 = 0;
      double d0 = 0;
      for (int x = 0; x < c.x_size(); ++x) {
        Rational r = 0;
        double d = 0;
        for (int a = 0; a < c.a_size(); ++a) {
          if (exact)
            r += c.exact(a, b, x, y);
          else
            d += c.real(a, b, x, y);
        }
        if (x == 0) {
          r0 = r;
          d0 = d;
        } else if (!close(r, r0, d, d0)) {
          return false;
        }
      }
    }
  // Alice's marginal independent of y.
  for (int x = 0; x < c.x_size(); ++x)
    for (int a = 0; a < c.a_size(); ++a) {
      Rational r0 = 0;
      double d0 = 0;
      for (int y = 0; y < c.y_size(); ++y) {
        Rational r = 0;
        double d = 0;
        for (int b = 0; b < c.b_size(); ++b) {
          if (exact)
            r += c.exact(a, b, x, y);
          else
            d += c.real(a, b, x, y);
        }
        if (y == 0) {
          r0 = r;
          d0 = d;
        } else if (!close(r, r0, d, d0)) {
          return false;
        }
      }
    }
  return true;
}

/// Checks nonnegativity and per-(x,y) normalization.
inline bool is_stochastic(const Correlation &c, double tol = kStrategyTol) {
  for (int x = 0; x < c.x_size(); ++x)
    for (int y = 0; y < c.y_size(); ++y) {
      Rational rs = 0;
      double ds = 0;
      for (int a = 0; a < c.a_size(); ++a)
        for (int b = 0; b < c.b_size(); ++b) {
          if (c.backend() == Backend::Exact) {
            if (c.exact(a, b, x, y) < 0)
              return false;
            rs += c.exact(a, b, x, y);
          } else {
            if (c.real(a, b, x, y) < -tol)
              return false;
            ds += c.real(a, b, x, y);
          }
        }
      if (c.backend() == Backend::Exact ? rs != 1 : std::abs(ds - 1.0) > tol)
        return false;
    }
  return true;
}

inline bool is_synchronous(const Correlation &c, double tol = kStrategyTol) {
  if (c.x_size() != c.y_size() || c.a_size() != c.b_size())
    fail(Errc::ShapeMismatch, "synchronicity needs identical question and answer sets");
  for (int x = 0; x < c.x_size(); ++x)
    for (int a = 0; a < c.a_size(); ++a)
      for (int b = 0; b < c.b_size(); ++b) {
        if (a == b)
          continue;
        if (c.backend() == Backend::Exact ? c.exact(a, b, x, x) != 0
                                          : std::abs(c.real(a, b, x, x)) > tol)
          return false;
      }
  return true;
}

inline Correlation uniform_correlation(const Game &g) {
  Correlation c = Correlation::for_game(g, Backend::Exact);
  Rational v(1, g.a_size() * g.b_size());
  for (Rational &e : c.exact_table())
    e = v;
  return c;
}

namespace detail {

inline bool ns_feige_support(int a, int b, int x, int y) {
  if (a == kBot && b == x)
    return true;
  if (a == y && b == kBot)
    return true;
  return a != kBot && b != kBot && a != y && b != x;
}

} // namespace detail

inline Correlation ns_strategy_feige() {
  Game g = feige();
  Correlation c = Correlation::for_game(g, Backend::Exact);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          if (detail::ns_feige_support(a, b, x, y))
            c.exact(a, b, x, y) = Rational(1, 3);
  return c;
}

/// On parallel_repeat(feige(), 3): round one plays ns_strategy_feige(),
/// rounds two and three answer (bot, x2) and (y3, bot).
inline Correlation ns_strategy_feige3() {
  Correlation c(8, 8, 27, 27, Backend::Exact);
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b)
      for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
          auto ad = decode_tuple(a, 3, 3), bd = decode_tuple(b, 3, 3);
          auto xd = decode_tuple(x, 2, 3), yd = decode_tuple(y, 2, 3);
          if (detail::ns_feige_support(ad[0], bd[0], xd[0], yd[0]) && ad[1] == kBot &&
              ad[2] == xd[1] && bd[1] == yd[2] && bd[2] == kBot)
            c.exact(a, b, x, y) = Rational(1, 3);
        }
  return c;
}

/// Deterministic strategy on parallel_repeat(feige(), 2m), pairing rounds
/// (2i, 2i+1) (0-based): Alice answers (bot, x_{2i}), Bob (y_{2i+1}, bot).
inline DeterministicStrategy classical_pair_strategy(int m) {
  if (m < 1)
    fail(Errc::InvalidArgument, "m must be >= 1");
  const int n = 2 * m;
  const std::int64_t X = int_pow(2, n);
  DeterministicStrategy s{std::vector<int>(X), std::vector<int>(X)};
  for (std::int64_t q = 0; q < X; ++q) {
    auto d = decode_tuple(q, 2, n);
    std::vector<int> a(n), b(n);
    for (int i = 0; i < m; ++i) {
      a[2 * i] = kBot;
      a[2 * i + 1] = d[2 * i];
      b[2 * i] = d[2 * i + 1];
      b[2 * i + 1] = kBot;
    }
    s.f[q] = static_cast<int>(encode_tuple(a, 3));
    s.g[q] = static_cast<int>(encode_tuple(b, 3));
  }
  return s;
}

/// The 5/16 strategy on parallel_repeat(feige(), 3).
inline DeterministicStrategy classical_three_strategy() {
  DeterministicStrategy s{std::vector<int>(8), std::vector<int>(8)};
  for (int q = 0; q < 8; ++q) {
    auto d = decode_tuple(q, 2, 3);
    std::vector<int> a{kBot, d[0] | d[2], d[0] == 0 ? kBot : 1};
    int both = d[1] & d[2];
    std::vector<int> b{both, kBot, both == 0 ? d[1] : kBot};
    s.f[q] = static_cast<int>(encode_tuple(a, 3));
    s.g[q] = static_cast<int>(encode_tuple(b, 3));
  }
  return s;
}

/// Coordinate-wise strategy on product(G, H).
inline DeterministicStrategy product_strategy(const Game &gg, const DeterministicStrategy &s1,
                                              const Game &hh, const DeterministicStrategy &s2) {
  check_deterministic(gg, s1);
  check_deterministic(hh, s2);
  DeterministicStrategy s{std::vector<int>(gg.x_size() * hh.x_size()),
                          std::vector<int>(gg.y_size() * hh.y_size())};
  for (int x = 0; x < static_cast<int>(s.f.size()); ++x)
    s.f[x] = s1.f[x % gg.x_size()] + gg.a_size() * s2.f[x / gg.x_size()];
  for (int y = 0; y < static_cast<int>(s.g.size()); ++y)
    s.g[y] = s1.g[y % gg.y_size()] + gg.b_size() * s2.g[y / gg.y_size()];
  return s;
}

/// Probability that a deterministic strategy on base^n wins every round in
/// `rounds` (the remaining rounds are ignored).
inline Rational round_win_probability(const Game &base, int n, const DeterministicStrategy &s,
                                      const std::vector<int> &rounds) {
  const std::int64_t X = int_pow(base.x_size(), n), Y = int_pow(base.y_size(), n);
  Rational total = 0;
  for (std::int64_t x = 0; x < X; ++x)
    for (std::int64_t y = 0; y < Y; ++y) {
      auto xd = decode_tuple(x, base.x_size(), n), yd = decode_tuple(y, base.y_size(), n);
      auto ad = decode_tuple(s.f[x], base.a_size(), n), bd = decode_tuple(s.g[y], base.b_size(), n);
      Rational p = 1;
      for (int i = 0; i < n; ++i)
        p *= base.prior(xd[i], yd[i]);
      bool win = true;
      for (int r : rounds)
        win = win && base.wins(ad[r], bd[r], xd[r], yd[r]);
      if (win)
        total += p;
    }
  return total;
}

} // namespace nlg

#endif // NLG_STRATEGIES_HPP
