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


#ifndef NLG_NPA_HPP
#define NLG_NPA_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nlg/game.hpp"
#include "nlg/ncpoly.hpp"
#include "nlg/rational.hpp"
#include "nlg/sdp.hpp"
#include "nlg/strategies.hpp"

namespace nlg {

/// k + A^{s1}B^{t1} + ...
struct Level {
  int k = 1;
  std::vector<std::pair<int, int>> extras;

  bool operator==(const Level &) const = default;
};

inline std::string to_string(const Level &l) {
  std::string s = std::to_string(l.k);
  for (auto [a, b] : l.extras) {
    s += "+";
    if (a > 0)
      s += a == 1 ? "A" : "A^" + std::to_string(a);
    if (b > 0)
      s += b == 1 ? "B" : "B^" + std::to_string(b);
  }
  return s;
}

inline Level parse_level(const std::string &text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      t += c;
  std::size_t i = 0;
  auto error = [&](const std::string &why) {
    fail(Errc::ParseError, "level '" + text + "': " + why);
  };
  auto integer = [&]() {
    std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
      ++i;
    if (start == i)
      error("expected a number");
    return std::stoi(t.substr(start, i - start));
  };
  Level lv;
  lv.k = integer();
  if (lv.k < 0)
    error("negative base degree");
  while (i < t.size()) {
    if (t[i] != '+')
      error("expected '+'");
    ++i;
    int s = 0, u = 0;
    bool any = false;
    for (char player : {'A', 'B'}) {
      if (i < t.size() && t[i] == player) {
        ++i;
        int e = 1;
        if (i < t.size() && t[i] == '^') {
          ++i;
          e = integer();
        }
        (player == 'A' ? s : u) = e;
        any = true;
      }
    }
    if (!any || s + u == 0)
      error("empty block");
    if (s + u <= lv.k)
      error("block degree must exceed the base degree");
    lv.extras.push_back({s, u});
  }
  return lv;
}

/// Normal-form letter sequences of length `len` (last answer eliminated).
inline std::vector<std::vector<Letter>> player_words(int questions, int answers, int len) {
  std::vector<std::vector<Letter>> out{{}};
  for (int step = 0; step < len; ++step) {
    std::vector<std::vector<Letter>> next;
    for (const auto &w : out)
      for (int q = 0; q < questions; ++q) {
        if (!w.empty() && letter_question(w.back()) == q)
          continue;
        for (int a = 0; a + 1 < answers; ++a) {
          auto v = w;
          v.push_back(make_letter(q, a));
          next.push_back(std::move(v));
        }
      }
    out = std::move(next);
  }
  return out;
}

inline constexpr int kSdpSizeBudget = 200;

/// Moment relaxation. Entry (i,j) of the moment matrix is the moment of
/// u_i^* u_j; moments of w and w^* are identified (real relaxation).
struct MomentProblem {
  std::vector<Word> index;
  std::vector<Word> classes;               // classes[0] is the empty word
  std::vector<std::vector<int>> entry;     // class of (i,j), -1 for a zero word
  std::vector<Rational> objective;         // per class
  std::vector<std::vector<std::pair<int, Rational>>> eq_rows; // sum coef * m_class = 0
  Level level;
  bool sync = false;

  int dim() const { return static_cast<int>(index.size()); }
  int class_of(const Word &w) const {
    Word r = std::min(w, w.adjoint());
    auto it = std::lower_bound(classes.begin(), classes.end(), r);
    return it != classes.end() && *it == r ? static_cast<int>(it - classes.begin()) : -1;
  }
};

/// Linear functional of a polynomial in class moments; nullopt if a word is
/// missing from the moment matrix.
inline std::optional<std::vector<std::pair<int, Rational>>>
moment_functional(const MomentProblem &mp, const NcPoly &p) {
  std::map<int, Rational> acc;
  for (const auto &[w, c] : p.terms()) {
    int k = mp.class_of(w);
    if (k < 0)
      return std::nullopt;
    acc[k] += c;
  }
  std::vector<std::pair<int, Rational>> out;
  for (auto &[k, c] : acc)
    if (c != 0)
      out.push_back({k, c});
  return out;
}

inline MomentProblem build_moment_sdp(const Game &game, const Level &level, bool sync,
                                      int size_budget = kSdpSizeBudget) {
  const int X = game.x_size(), Y = game.y_size(), A = game.a_size(), B = game.b_size();
  std::vector<std::pair<int, int>> blocks;
  for (int s = 0; s <= level.k; ++s)
    for (int t = 0; s + t <= level.k; ++t)
      blocks.push_back({s, t});
  for (auto e : level.extras)
    if (std::find(blocks.begin(), blocks.end(), e) == blocks.end())
      blocks.push_back(e);
  // Size check before enumeration.
  auto count = [](int q, int a, int len) -> double {
    if (len == 0)
      return 1;
    return q * (a - 1.0) * std::pow(std::max(0, (q - 1) * (a - 1)), len - 1);
  };
  double total = 0;
  for (auto [s, t] : blocks)
    total += count(X, A, s) * count(Y, B, t);
  if (total > size_budget)
    fail(Errc::SizeBudget, "moment matrix dimension " + std::to_string(static_cast<long>(total)) +
                               " exceeds the budget " + std::to_string(size_budget));
  MomentProblem mp;
  mp.level = level;
  mp.sync = sync;
  for (auto [s, t] : blocks)
    for (const auto &a : player_words(X, A, s))
      for (const auto &b : player_words(Y, B, t))
        mp.index.push_back(Word{a, b});
  const int n = mp.dim();
  std::vector<std::vector<std::optional<Word>>> words(n, std::vector<std::optional<Word>>(n));
  std::vector<Word> reps;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      words[i][j] = mul_words(mp.index[i].adjoint(), mp.index[j]);
      if (words[i][j])
        reps.push_back(std::min(*words[i][j], words[i][j]->adjoint()));
    }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  mp.classes = std::move(reps);
  if (mp.classes.empty() || !mp.classes[0].empty())
    fail(Errc::InvalidArgument, "moment index must contain the empty word");
  mp.entry.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (words[i][j])
        mp.entry[i][j] = mp.class_of(*words[i][j]);

  auto obj = moment_functional(mp, game_polynomial(game));
  if (!obj)
    fail(Errc::InvalidArgument, "level does not contain the words of the game polynomial");
  mp.objective.assign(mp.classes.size(), Rational(0));
  for (auto &[k, c] : *obj)
    mp.objective[k] = c;

  if (sync) {
    if (X != Y || A != B)
      fail(Errc::ShapeMismatch, "synchronicity needs equal question and answer sets");
    for (int x = 0; x < X; ++x)
      for (int a = 0; a < A; ++a)
        for (int b = 0; b < B; ++b) {
          if (a == b)
            continue;
          auto row = moment_functional(
              mp, NcPoly::alice_gen(x, a, A) * NcPoly::bob_gen(x, b, B));
          if (!row)
            fail(Errc::InvalidArgument, "level does not contain the synchronicity moments");
          if (!row->empty())
            mp.eq_rows.push_back(std::move(*row));
        }
  }
  return mp;
}

namespace detail {

using SparseRow = std::map<int, Rational>;

/// Exact reduced row echelon form of [rows | rhs]. Returns false when the
/// system is inconsistent. On success `pivots[r]` is the pivot column of row r.
inline bool exact_rref(std::vector<SparseRow> &rows, std::vector<Rational> &rhs,
                       std::vector<int> &pivots) {
  pivots.clear();
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // Pick the row (from r) whose leading column is smallest.
    std::size_t best = rows.size();
    int col = -1;
    for (std::size_t k = r; k < rows.size(); ++k)
      if (!rows[k].empty() && (col < 0 || rows[k].begin()->first < col)) {
        col = rows[k].begin()->first;
        best = k;
      }
    if (best == rows.size())
      break;
    std::swap(rows[r], rows[best]);
    std::swap(rhs[r], rhs[best]);
    const Rational inv = 1 / rows[r].begin()->second;
    for (auto &[c, v] : rows[r])
      v *= inv;
    rhs[r] *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r)
        continue;
      auto it = rows[k].find(col);
      if (it == rows[k].end())
        continue;
      const Rational f = it->second;
      for (const auto &[c, v] : rows[r]) {
        Rational &dst = rows[k][c];
        dst -= f * v;
        if (dst == 0)
          rows[k].erase(c);
      }
      rhs[k] -= f * rhs[r];
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t k = r; k < rows.size(); ++k)
    if (rhs[k] != 0)
      return false;
  rows.resize(r);
  rhs.resize(r);
  return true;
}

/// Affine parametrization x = x0 + N z of {rows x = rhs} over `nvars` unknowns.
struct AffineSpace {
  std::vector<Rational> x0;
  std::vector<std::vector<Rational>> N; // nvars x free
  std::vector<SparseRow> rows;          // reduced rows
  std::vector<Rational> rhs;
  std::vector<int> pivots, free;
};

inline std::optional<AffineSpace> affine_space(std::vector<SparseRow> rows,
                                               std::vector<Rational> rhs, int nvars) {
  AffineSpace s;
  if (!exact_rref(rows, rhs, s.pivots))
    return std::nullopt;
  std::vector<char> is_pivot(nvars, 0);
  for (int p : s.pivots)
    is_pivot[p] = 1;
  for (int j = 0; j < nvars; ++j)
    if (!is_pivot[j])
      s.free.push_back(j);
  s.x0.assign(nvars, Rational(0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    s.x0[s.pivots[r]] = rhs[r];
  std::vector<int> free_pos(nvars, -1);
  for (std::size_t k = 0; k < s.free.size(); ++k)
    free_pos[s.free[k]] = static_cast<int>(k);
  s.N.assign(nvars, std::vector<Rational>(s.free.size(), Rational(0)));
  for (std::size_t k = 0; k < s.free.size(); ++k)
    s.N[s.free[k]][k] = 1;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto &[c, v] : rows[r])
      if (c != s.pivots[r])
        s.N[s.pivots[r]][free_pos[c]] = -v;
  s.rows = std::move(rows);
  s.rhs = std::move(rhs);
  return s;
}

} // namespace detail

struct NpaResult {
  double value = 0;         // relaxation optimum (dual objective)
  double primal_value = 0;  // SOS side
  Eigen::MatrixXd moment;   // moment matrix
  Eigen::MatrixXd gram;     // Gram matrix of the SOS for value - Phi
  std::vector<double> moments; // per class
  SdpResult sdp;
};

/// Solves the relaxation. Free moments are parametrized over the null space
/// of the equality rows; the empty word is fixed to 1.
inline NpaResult solve_moment_sdp(const MomentProblem &mp, const SdpOptions &opt = {}) {
  const int n = mp.dim(), nc = static_cast<int>(mp.classes.size());
  // Unknowns: classes 1..nc-1 (index k-1). Equalities move m_0 = 1 to the rhs.
  std::vector<detail::SparseRow> rows;
  std::vector<Rational> rhs;
  for (const auto &row : mp.eq_rows) {
    detail::SparseRow r;
    Rational b = 0;
    for (const auto &[k, c] : row) {
      if (k == 0)
        b -= c;
      else
        r[k - 1] += c;
    }
    rows.push_back(std::move(r));
    rhs.push_back(b);
  }
  auto space = detail::affine_space(rows, rhs, nc - 1);
  if (!space)
    fail(Errc::Infeasible, "moment equalities are inconsistent");
  const int nz = static_cast<int>(space->free.size());
  std::vector<Eigen::MatrixXd> E(nc, Eigen::MatrixXd::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mp.entry[i][j] >= 0)
        E[mp.entry[i][j]](i, j) = 1;
  SdpProblem p;
  p.C = E[0];
  double constant = mp.objective[0].get_d();
  for (int k = 1; k < nc; ++k) {
    const double v = space->x0[k - 1].get_d();
    if (v != 0) {
      p.C += v * E[k];
      constant += v * mp.objective[k].get_d();
    }
  }
  p.A.assign(nz, Eigen::MatrixXd::Zero(n, n));
  p.b = Eigen::VectorXd::Zero(nz);
  for (int k = 1; k < nc; ++k)
    for (int z = 0; z < nz; ++z) {
      const Rational &v = space->N[k - 1][z];
      if (v == 0)
        continue;
      p.A[z] -= v.get_d() * E[k];
      p.b(z) += Rational(v * mp.objective[k]).get_d();
    }
  NpaResult r;
  r.sdp = sdp_solve(p, opt);
  r.value = r.sdp.dual + constant;
  r.primal_value = r.sdp.primal + constant;
  r.moment = r.sdp.S;
  r.gram = r.sdp.X;
  r.moments.assign(nc, 0.0);
  r.moments[0] = 1;
  for (int k = 1; k < nc; ++k) {
    double v = space->x0[k - 1].get_d();
    for (int z = 0; z < nz; ++z)
      if (space->N[k - 1][z] != 0)
        v += space->N[k - 1][z].get_d() * r.sdp.y(z);
    r.moments[k] = v;
  }
  return r;
}

inline double quantum_upper_bound(const Game &game, const Level &level, bool sync = false) {
  return solve_moment_sdp(build_moment_sdp(game, level, sync)).value;
}

/// Coefficient residual of sum_ij G_ij u_i^* u_j against lambda - Phi.
inline double gram_residual(const MomentProblem &mp, const Eigen::MatrixXd &G, double lambda,
                            const Game &game) {
  std::map<Word, double> acc;
  for (int i = 0; i < mp.dim(); ++i)
    for (int j = 0; j < mp.dim(); ++j)
      if (auto w = mul_words(mp.index[i].adjoint(), mp.index[j]))
        acc[*w] += G(i, j);
  acc[Word{}] -= lambda;
  const NcPoly phi = game_polynomial(game);
  for (const auto &[w, c] : phi.terms())
    acc[w] += c.get_d();
  double worst = 0;
  for (const auto &[w, v] : acc)
    worst = std::max(worst, std::abs(v));
  return worst;
}

/// Moment matrix computed directly from a strategy: Re <psi| u_i^* u_j |psi>.
inline Eigen::MatrixXd strategy_moment_matrix(const MomentProblem &mp, const QuantumStrategy &s) {
  const int n = mp.dim();
  std::vector<CVector> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = kron(word_matrix(mp.index[i].alice, s.alice, s.dim_a),
                word_matrix(mp.index[i].bob, s.bob, s.dim_b)) *
           s.state;
  Eigen::MatrixXd M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      M(i, j) = v[i].dot(v[j]).real();
  return M;
}

/// Largest violation of the problem constraints by a moment matrix: equal
/// classes, zero words, the unit entry, and the equality rows. `objective`
/// receives sum_k c_k m_k using the (0, j) entries.
inline double moment_violation(const MomentProblem &mp, const Eigen::MatrixXd &M,
                               double *objective = nullptr) {
  const int n = mp.dim(), nc = static_cast<int>(mp.classes.size());
  std::vector<double> value(nc, 0.0);
  std::vector<char> seen(nc, 0);
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int k = mp.entry[i][j];
      if (k < 0) {
        worst = std::max(worst, std::abs(M(i, j)));
      } else if (!seen[k]) {
        seen[k] = 1;
        value[k] = M(i, j);
      } else {
        worst = std::max(worst, std::abs(M(i, j) - value[k]));
      }
    }
  worst = std::max(worst, std::abs(value[0] - 1.0));
  for (const auto &row : mp.eq_rows) {
    double s = 0;
    for (const auto &[k, c] : row)
      s += c.get_d() * value[k];
    worst = std::max(worst, std::abs(s));
  }
  if (objective) {
    *objective = 0;
    for (int k = 0; k < nc; ++k)
      *objective += mp.objective[k].get_d() * value[k];
  }
  return worst;
}

/// Eigenvectors of the moment matrix with eigenvalue below `tol`.
inline std::vector<std::vector<double>> moment_kernel(const Eigen::MatrixXd &M, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  std::vector<std::vector<double>> out;
  for (Eigen::Index k = 0; k < M.rows(); ++k)
    if (es.eigenvalues()(k) < tol) {
      const Eigen::VectorXd v = es.eigenvectors().col(k);
      out.emplace_back(v.data(), v.data() + v.size());
    }
  return out;
}

// SOS certificates over a fixed basis.

namespace detail {

/// Linear system for Y (upper triangle, row-major pairs i <= j) with
/// sum_ij Y_ij F_i^* F_j = lambda - Phi, one equation per word class.
struct SosSystem {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<SparseRow> rows;
  std::vector<Rational> rhs;
};

inline SosSystem sos_system(const std::vector<NcPoly> &F, const Rational &lambda,
                            const Game &game) {
  SosSystem sys;
  sys.n = static_cast<int>(F.size());
  std::map<Word, int> eq;
  auto eq_of = [&](const Word &w) {
    Word r = std::min(w, w.adjoint());
    auto [it, inserted] = eq.try_emplace(r, static_cast<int>(sys.rows.size()));
    if (inserted) {
      sys.rows.emplace_back();
      sys.rhs.emplace_back(0);
    }
    return it->second;
  };
  std::vector<NcPoly> adj(F.size());
  for (std::size_t i = 0; i < F.size(); ++i)
    adj[i] = F[i].adjoint();
  for (int i = 0; i < sys.n; ++i)
    for (int j = i; j < sys.n; ++j) {
      const int var = static_cast<int>(sys.pairs.size());
      sys.pairs.push_back({i, j});
      NcPoly prod = adj[i] * F[j];
      if (i != j)
        prod += adj[j] * F[i];
      // Only the w <= w^* half of each self-adjoint product is kept.
      for (const auto &[w, c] : prod.terms()) {
        if (w.adjoint() < w)
          continue;
        SparseRow &row = sys.rows[eq_of(w)];
        row[var] += c;
        if (row[var] == 0)
          row.erase(var);
      }
    }
  NcPoly target = NcPoly(lambda) - game_polynomial(game);
  for (const auto &[w, c] : target.terms())
    if (!(w.adjoint() < w))
      sys.rhs[eq_of(w)] += c;
  return sys;
}

inline QMatrix to_qmatrix(const SosSystem &sys, const std::vector<Rational> &y) {
  QMatrix Y(sys.n, std::vector<Rational>(sys.n, Rational(0)));
  for (std::size_t v = 0; v < sys.pairs.size(); ++v) {
    auto [i, j] = sys.pairs[v];
    Y[i][j] = Y[j][i] = y[v];
  }
  return Y;
}

} // namespace detail

struct FeasibilityResult {
  Eigen::MatrixXd Y;
  double margin = 0; // smallest eigenvalue achieved
  int free_parameters = 0;
  SdpResult sdp;
};

/// Finds Y with F^* Y F = lambda - Phi maximizing its smallest eigenvalue;
/// Infeasible when the identity has no solution or the margin is below epsilon.
inline FeasibilityResult feasibility_sdp(const std::vector<NcPoly> &F, const Rational &lambda,
                                         double epsilon, const Game &game,
                                         const SdpOptions &opt = {}) {
  if (!(epsilon > 0))
    fail(Errc::InvalidArgument, "epsilon must be positive");
  const int n = static_cast<int>(F.size());
  if (n > kSdpSizeBudget)
    fail(Errc::SizeBudget, "basis is larger than the SDP size budget");
  detail::SosSystem sys = detail::sos_system(F, lambda, game);
  auto space = detail::affine_space(sys.rows, sys.rhs, static_cast<int>(sys.pairs.size()));
  if (!space)
    fail(Errc::Infeasible, "no symmetric Y satisfies the identity");
  const int nz = static_cast<int>(space->free.size());
  auto mat = [&](auto &&entry) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t v = 0; v < sys.pairs.size(); ++v) {
      auto [i, j] = sys.pairs[v];
      m(i, j) = m(j, i) = entry(v);
    }
    return m;
  };
  SdpProblem p;
  p.C = mat([&](std::size_t v) { return space->x0[v].get_d(); });
  for (int z = 0; z < nz; ++z)
    p.A.push_back(-mat([&](std::size_t v) { return space->N[v][z].get_d(); }));
  p.A.push_back(Eigen::MatrixXd::Identity(n, n));
  p.b = Eigen::VectorXd::Zero(nz + 1);
  p.b(nz) = 1;
  FeasibilityResult r;
  r.free_parameters = nz;
  r.sdp = sdp_solve(p, opt);
  r.Y = r.sdp.S + r.sdp.y(nz) * Eigen::MatrixXd::Identity(n, n);
  r.margin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(r.Y, Eigen::EigenvaluesOnly)
                 .eigenvalues()
                 .minCoeff();
  if (r.margin < epsilon)
    fail(Errc::Infeasible, "best smallest eigenvalue " + std::to_string(r.margin) +
                               " is below epsilon " + std::to_string(epsilon));
  return r;
}

/// Coefficient residual of F^* Y F against lambda - Phi in floating point.
inline double sos_residual(const std::vector<NcPoly> &F, const Eigen::MatrixXd &Y,
                           const Rational &lambda, const Game &game) {
  detail::SosSystem sys = detail::sos_system(F, lambda, game);
  double worst = 0;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    double s = -sys.rhs[r].get_d();
    for (const auto &[v, c] : sys.rows[r])
      s += c.get_d() * Y(sys.pairs[v].first, sys.pairs[v].second);
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

inline constexpr std::int64_t kCertificateDenominator = 1 << 16;

/// Rationalizes Y entrywise, projects orthogonally (exactly) onto the affine
/// space of the identity, and verifies the result.
inline SosCertificate round_certificate(const std::vector<NcPoly> &F, const Eigen::MatrixXd &Yf,
                                        const Rational &lambda, const Game &game,
                                        std::int64_t denom_bound = kCertificateDenominator) {
  const int n = static_cast<int>(F.size());
  if (Yf.rows() != n || Yf.cols() != n)
    fail(Errc::DimensionMismatch, "Y dimension differs from the basis length");
  if ((Yf - Yf.transpose()).cwiseAbs().maxCoeff() > 1e-9)
    fail(Errc::NotSymmetric, "Y is not symmetric");
  if (denom_bound < 1)
    fail(Errc::InvalidArgument, "denominator bound must be positive");
  detail::SosSystem sys = detail::sos_system(F, lambda, game);
  auto space = detail::affine_space(sys.rows, sys.rhs, static_cast<int>(sys.pairs.size()));
  if (!space)
    fail(Errc::RoundingFailed, "identity has no solution over this basis");
  const int nv = static_cast<int>(sys.pairs.size());
  std::vector<Rational> y(nv);
  for (int v = 0; v < nv; ++v)
    y[v] = rationalize(0.5 * (Yf(sys.pairs[v].first, sys.pairs[v].second) +
                              Yf(sys.pairs[v].second, sys.pairs[v].first)),
                       denom_bound);
  // y += R^T w with (R R^T) w = d - R y over the reduced rows R.
  const std::size_t k = space->rows.size();
  std::vector<Rational> resid(k);
  bool exact = true;
  for (std::size_t r = 0; r < k; ++r) {
    resid[r] = space->rhs[r];
    for (const auto &[v, c] : space->rows[r])
      resid[r] -= c * y[v];
    exact = exact && resid[r] == 0;
  }
  if (!exact) {
    std::vector<std::vector<Rational>> G(k, std::vector<Rational>(k + 1, Rational(0)));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a; b < k; ++b) {
        Rational s = 0;
        const auto &ra = space->rows[a], &rb = space->rows[b];
        auto ia = ra.begin(), ib = rb.begin();
        while (ia != ra.end() && ib != rb.end()) {
          if (ia->first < ib->first)
            ++ia;
          else if (ib->first < ia->first)
            ++ib;
          else {
            s += ia->second * ib->second;
            ++ia;
            ++ib;
          }
        }
        G[a][b] = G[b][a] = s;
      }
      G[a][k] = resid[a];
    }
    // Gram matrix of independent rows is positive definite: plain elimination.
    for (std::size_t c = 0; c < k; ++c) {
      if (G[c][c] == 0)
        fail(Errc::RoundingFailed, "projection system is singular");
      for (std::size_t r = c + 1; r < k; ++r) {
        if (G[r][c] == 0)
          continue;
        const Rational f = G[r][c] / G[c][c];
        for (std::size_t j = c; j <= k; ++j)
          if (G[c][j] != 0)
            G[r][j] -= f * G[c][j];
      }
    }
    std::vector<Rational> w(k);
    for (std::size_t c = k; c-- > 0;) {
      Rational s = G[c][k];
      for (std::size_t j = c + 1; j < k; ++j)
        if (G[c][j] != 0)
          s -= G[c][j] * w[j];
      w[c] = s / G[c][c];
    }
    for (std::size_t r = 0; r < k; ++r)
      if (w[r] != 0)
        for (const auto &[v, c] : space->rows[r])
          y[v] += c * w[r];
  }
  SosCertificate cert{F, detail::to_qmatrix(sys, y), lambda};
  if (!sos_verify(cert, game))
    fail(Errc::RoundingFailed, "rounded matrix is not positive definite or misses the identity");
  return cert;
}

} // namespace nlg

#endif // NLG_NPA_HPP
