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

#ifndef NLG_CLASSICAL_HPP
#define NLG_CLASSICAL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "nlg/game.hpp"
#include "nlg/strategies.hpp"

namespace nlg {

struct SearchReport {
  Rational optimum = 0;
  DeterministicStrategy witness;
  std::int64_t nodes_explored = 0;
  std::int64_t pruned = 0;
  bool complete = false;
};

namespace detail {

/// Prior scaled to integers: weight(x,y) = prior(x,y) * scale.
struct IntWeights {
  std::vector<std::int64_t> w;
  Integer scale = 1;

  explicit IntWeights(const Game &g) {
    for (const Rational &p : g.prior_table())
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.get_den_mpz_t());
    if (scale > Integer(std::numeric_limits<std::int64_t>::max() >> 8))
      fail(Errc::BudgetExceeded, "prior denominators too large for the integer search");
    w.reserve(g.prior_table().size());
    for (const Rational &p : g.prior_table()) {
      Integer v = p.get_num() * (scale / p.get_den());
      w.push_back(v.get_si());
    }
  }
  Rational to_rational(std::int64_t v) const {
    Rational r(Integer(static_cast<long>(v)), scale);
    r.canonicalize();
    return r;
  }
};

} // namespace detail

/// For each x, the Alice answer maximizing sum_y prior(x,y) V(a, g(y) | x, y),
/// smallest index on ties. Returns the answers and the resulting value.
inline std::pair<std::vector<int>, Rational> best_response(const Game &game,
                                                           const std::vector<int> &g) {
  if (static_cast<int>(g.size()) != game.y_size())
    fail(Errc::ShapeMismatch, "Bob strategy has wrong length");
  for (int b : g)
    if (b < 0 || b >= game.b_size())
      fail(Errc::ShapeMismatch, "Bob answer out of range");
  std::vector<int> f(game.x_size(), 0);
  Rational total = 0;
  for (int x = 0; x < game.x_size(); ++x) {
    Rational best = -1;
    for (int a = 0; a < game.a_size(); ++a) {
      Rational v = 0;
      for (int y = 0; y < game.y_size(); ++y)
        if (game.wins(a, g[y], x, y))
          v += game.prior(x, y);
      if (v > best) {
        best = v;
        f[x] = a;
      }
    }
    total += best;
  }
  return {f, total};
}

inline constexpr double kExhaustiveBudget = 1e7;

/// Enumerates every Bob strategy in lexicographic order; keeps the first optimum.
inline SearchReport classical_value_exhaustive(const Game &game,
                                               double budget = kExhaustiveBudget) {
  const double count = std::pow(static_cast<double>(game.b_size()), game.y_size());
  if (count > budget)
    fail(Errc::BudgetExceeded, "b_size^y_size exceeds the exhaustive budget");
  detail::IntWeights iw(game);
  const int X = game.x_size(), Y = game.y_size(), A = game.a_size();
  std::vector<int> g(Y, 0), best_g;
  std::int64_t best = -1, nodes = 0;
  while (true) {
    ++nodes;
    std::int64_t total = 0;
    for (int x = 0; x < X; ++x) {
      std::int64_t m = 0;
      for (int a = 0; a < A; ++a) {
        std::int64_t v = 0;
        for (int y = 0; y < Y; ++y)
          if (game.wins(a, g[y], x, y))
            v += iw.w[static_cast<std::size_t>(x) * Y + y];
        m = std::max(m, v);
      }
      total += m;
    }
    if (total > best) {
      best = total;
      best_g = g;
    }
    int i = Y - 1;
    while (i >= 0 && ++g[i] == game.b_size())
      g[i--] = 0;
    if (i < 0)
      break;
  }
  SearchReport r;
  r.witness.g = best_g;
  r.witness.f = best_response(game, best_g).first;
  r.optimum = iw.to_rational(best);
  r.nodes_explored = nodes;
  r.complete = true;
  return r;
}

struct BnbOptions {
  std::int64_t budget = std::numeric_limits<std::int64_t>::max();
  std::optional<DeterministicStrategy> incumbent;
  /// Automorphisms (or generators of a group of them) of the game. Those
  /// fixing the first branched question reduce the root branching to one
  /// representative per orbit of Bob answers.
  std::vector<Relabeling> symmetries;
  int jobs = 1;
};

/// Upper bound for a partial Bob assignment (entries < 0 are unassigned):
/// sum_x max_a sum_y prior(x,y) u(a,x,y), u = V(a,g(y)|x,y) if assigned else max_b V.
inline Rational bnb_bound(const Game &game, const std::vector<int> &partial) {
  Rational total = 0;
  for (int x = 0; x < game.x_size(); ++x) {
    Rational best = 0;
    for (int a = 0; a < game.a_size(); ++a) {
      Rational v = 0;
      for (int y = 0; y < game.y_size(); ++y) {
        bool u = false;
        if (partial[y] >= 0) {
          u = game.wins(a, partial[y], x, y);
        } else {
          for (int b = 0; b < game.b_size() && !u; ++b)
            u = game.wins(a, b, x, y);
        }
        if (u)
          v += game.prior(x, y);
      }
      best = std::max(best, v);
    }
    total += best;
  }
  return total;
}

namespace detail {

class BranchAndBound {
public:
  BranchAndBound(const Game &game, const BnbOptions &opt)
      : game_(game), opt_(opt), iw_(game), X_(game.x_size()), Y_(game.y_size()),
        A_(game.a_size()), B_(game.b_size()) {
    // Question order: largest prior mass first, then index.
    std::vector<std::int64_t> mass(Y_, 0);
    for (int x = 0; x < X_; ++x)
      for (int y = 0; y < Y_; ++y)
        mass[y] += w(x, y);
    order_.resize(Y_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int p, int q) { return mass[p] > mass[q]; });

    // delta_[(y*B + b)*X*A + x*A + a] = w(x,y) (V(a,b|x,y) - max_b' V(a,b'|x,y)).
    base_.assign(static_cast<std::size_t>(X_) * A_, 0);
    delta_.assign(static_cast<std::size_t>(Y_) * B_ * X_ * A_, 0);
    for (int x = 0; x < X_; ++x)
      for (int a = 0; a < A_; ++a)
        for (int y = 0; y < Y_; ++y) {
          bool any = false;
          for (int b = 0; b < B_ && !any; ++b)
            any = game.wins(a, b, x, y);
          if (any)
            base_[x * A_ + a] += w(x, y);
          for (int b = 0; b < B_; ++b)
            delta_[((static_cast<std::size_t>(y) * B_ + b) * X_ + x) * A_ + a] =
                (any && !game.wins(a, b, x, y)) ? -w(x, y) : 0;
        }
  }

  SearchReport run() {
    // Default incumbent: Bob always answers 0, Alice best-responds.
    incumbent_g_.assign(Y_, 0);
    incumbent_ = to_int(best_response(game_, incumbent_g_).second);
    if (opt_.incumbent) {
      check_deterministic(game_, *opt_.incumbent);
      std::int64_t v = to_int(best_response(game_, opt_.incumbent->g).second);
      if (v > incumbent_) {
        incumbent_ = v;
        incumbent_g_ = opt_.incumbent->g;
      }
    }

    nodes_ = 1;
    std::int64_t root = bound(base_);
    bool complete = true;
    if (Y_ > 0 && root > incumbent_.load()) {
      std::vector<int> first = root_answers();
      complete = explore_root(first);
    } else {
      ++pruned_;
    }

    SearchReport r;
    r.optimum = iw_.to_rational(incumbent_.load());
    r.witness.g = incumbent_g_;
    r.witness.f = best_response(game_, incumbent_g_).first;
    r.nodes_explored = nodes_.load();
    r.pruned = pruned_.load();
    r.complete = complete;
    return r;
  }

private:
  std::int64_t w(int x, int y) const { return iw_.w[static_cast<std::size_t>(x) * Y_ + y]; }

  std::int64_t to_int(const Rational &v) const {
    Rational s = v * Rational(iw_.scale);
    return s.get_num().get_si();
  }

  std::int64_t bound(const std::vector<std::int64_t> &s) const {
    std::int64_t total = 0;
    for (int x = 0; x < X_; ++x) {
      std::int64_t m = 0;
      for (int a = 0; a < A_; ++a)
        m = std::max(m, s[x * A_ + a]);
      total += m;
    }
    return total;
  }

  const std::int64_t *delta(int y, int b) const {
    return &delta_[(static_cast<std::size_t>(y) * B_ + b) * X_ * A_];
  }

  std::vector<int> root_answers() const {
    const int y0 = order_[0];
    std::vector<int> parent(B_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v)
        v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const Relabeling &s : opt_.symmetries) {
      if (static_cast<int>(s.y.size()) != Y_ || s.y[y0] != y0 || !verifies(game_, game_, s))
        continue;
      for (int b = 0; b < B_; ++b) {
        int r1 = find(b), r2 = find(s.b[b]);
        if (r1 != r2)
          parent[std::max(r1, r2)] = std::min(r1, r2);
      }
    }
    std::vector<int> reps;
    for (int b = 0; b < B_; ++b)
      if (find(b) == b)
        reps.push_back(b);
    return reps;
  }

  bool explore_root(const std::vector<int> &answers) {
    const int y0 = order_[0];
    // Children sorted by bound, largest first.
    std::vector<std::pair<std::int64_t, int>> kids;
    for (int b : answers) {
      std::vector<std::int64_t> s = base_;
      apply(s, y0, b);
      kids.push_back({bound(s), b});
    }
    std::stable_sort(kids.begin(), kids.end(),
                     [](const auto &p, const auto &q) { return p.first > q.first; });
    std::atomic<std::size_t> next{0};
    std::atomic<bool> aborted{false};
    auto worker = [&]() {
      std::vector<int> g(Y_, -1);
      std::vector<std::vector<std::int64_t>> stack(Y_ + 1,
                                                   std::vector<std::int64_t>(X_ * A_));
      for (std::size_t i = next++; i < kids.size(); i = next++) {
        if (aborted.load())
          return;
        if (kids[i].first <= incumbent_.load()) {
          ++pruned_;
          continue;
        }
        stack[1] = base_;
        apply(stack[1], y0, kids[i].second);
        g[y0] = kids[i].second;
        ++nodes_;
        if (!dfs(1, g, stack)) {
          aborted = true;
          return;
        }
        g[y0] = -1;
      }
    };
    int jobs = std::max(1, opt_.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j)
        pool.emplace_back(worker);
      for (auto &t : pool)
        t.join();
    }
    return !aborted.load();
  }

  void apply(std::vector<std::int64_t> &s, int y, int b) const {
    const std::int64_t *d = delta(y, b);
    for (int i = 0; i < X_ * A_; ++i)
      s[i] += d[i];
  }

  // Returns false when the node budget is exhausted.
  bool dfs(int depth, std::vector<int> &g, std::vector<std::vector<std::int64_t>> &stack) {
    const std::vector<std::int64_t> &cur = stack[depth];
    if (depth == Y_) {
      std::int64_t v = bound(cur);
      std::lock_guard<std::mutex> lock(mutex_);
      if (v > incumbent_.load()) {
        incumbent_ = v;
        incumbent_g_ = g;
      }
      return true;
    }
    const int y = order_[depth];
    std::vector<std::pair<std::int64_t, int>> kids;
    kids.reserve(B_);
    std::vector<std::int64_t> &child = stack[depth + 1];
    for (int b = 0; b < B_; ++b) {
      const std::int64_t *d = delta(y, b);
      std::int64_t total = 0;
      for (int x = 0; x < X_; ++x) {
        std::int64_t m = 0;
        for (int a = 0; a < A_; ++a)
          m = std::max(m, cur[x * A_ + a] + d[x * A_ + a]);
        total += m;
      }
      kids.push_back({total, b});
    }
    std::stable_sort(kids.begin(), kids.end(),
                     [](const auto &p, const auto &q) { return p.first > q.first; });
    for (const auto &[bnd, b] : kids) {
      if (bnd <= incumbent_.load()) {
        ++pruned_;
        continue;
      }
      if (nodes_.fetch_add(1) >= opt_.budget)
        return false;
      child = cur;
      apply(child, y, b);
      g[y] = b;
      if (!dfs(depth + 1, g, stack))
        return false;
      g[y] = -1;
    }
    return true;
  }

  const Game &game_;
  const BnbOptions &opt_;
  IntWeights iw_;
  int X_, Y_, A_, B_;
  std::vector<int> order_;
  std::vector<std::int64_t> base_, delta_;
  std::atomic<std::int64_t> incumbent_{0};
  std::vector<int> incumbent_g_;
  std::mutex mutex_;
  std::atomic<std::int64_t> nodes_{0}, pruned_{0};
};

} // namespace detail

/// Depth-first branch and bound over Bob's answers with Alice folded into the
/// best response. complete=false means the node budget ran out; the optimum is
/// then the best incumbent (a lower bound).
inline SearchReport classical_value_bnb(const Game &game, const BnbOptions &opt = {}) {
  detail::BranchAndBound search(game, opt);
  return search.run();
}

} // namespace nlg

#endif // NLG_CLASSICAL_HPP
