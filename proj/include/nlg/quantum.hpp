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

#ifndef NLG_QUANTUM_HPP
#define NLG_QUANTUM_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nlg/game.hpp"
#include "nlg/ncpoly.hpp"
#include "nlg/strategies.hpp"
#include "nlg/surd.hpp"

namespace nlg {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Basis and operators of the optimal family, parameterized by p.
struct FeigeFamily {
  double p = 0.75;
  CVector zero_t, one_t, bot; // |~0>, |~1>, |bot>
  CMatrix x_t, z_t;           // X (+) 1, Z (+) 1

  explicit FeigeFamily(double weight) : p(weight) {
    if (!(weight >= 0.0 && weight <= 1.0))
      fail(Errc::DomainError, "p must lie in [0, 1]");
    const double s = std::sqrt(p), c = std::sqrt(1.0 - p);
    bot = CVector::Zero(3);
    bot << s, 0, c;
    // |bot> is fixed; e = X~|bot'> direction |1>, u spans the rest of span{|0>,|2>}.
    CVector e = CVector::Zero(3), u = CVector::Zero(3);
    e << 0, 1, 0;
    u << -c, 0, s;
    zero_t = (e + u) / std::sqrt(2.0);
    one_t = (e - u) / std::sqrt(2.0);
    x_t = CMatrix::Zero(3, 3);
    x_t(0, 1) = x_t(1, 0) = x_t(2, 2) = 1;
    z_t = CMatrix::Zero(3, 3);
    z_t(0, 0) = 1;
    z_t(1, 1) = -1;
    z_t(2, 2) = 1;
  }

  /// Basis vector for answer a (0, 1, bot) before the question rotation.
  const CVector &answer_vector(int a) const { return a == 0 ? zero_t : a == 1 ? one_t : bot; }
};

inline double winning_formula(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    fail(Errc::DomainError, "p must lie in [0, 1]");
  return p * (2.0 - p + 2.0 * std::sqrt(1.0 - p)) / 3.0;
}

/// P^x_a = W_x |a~><a~| W_x with W_x = X~ Z~^x X~, Q^y_b = X~ P^y_b X~, and the
/// maximally entangled state of dimension 3.
inline QuantumStrategy feige_optimal_strategy(double p) {
  FeigeFamily fam(p);
  QuantumStrategy s;
  s.dim_a = s.dim_b = 3;
  s.state = CVector::Zero(9);
  for (int i = 0; i < 3; ++i)
    s.state(i * 3 + i) = 1.0 / std::sqrt(3.0);
  CMatrix w[2] = {fam.x_t * fam.x_t, fam.x_t * fam.z_t * fam.x_t};
  s.alice.resize(2);
  s.bob.resize(2);
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 3; ++a) {
      const CVector &v = fam.answer_vector(a);
      CMatrix proj = w[x] * (v * v.adjoint()) * w[x];
      s.alice[x].push_back(proj);
      s.bob[x].push_back(fam.x_t * proj * fam.x_t);
    }
  return s;
}

/// A unit vector spanning the range of a rank-one projection.
inline CVector range_vector(const CMatrix &p) {
  Eigen::Index best = 0;
  p.colwise().norm().maxCoeff(&best);
  CVector v = p.col(best);
  return v / v.norm();
}

inline void check_rank_one(const CMatrix &p) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(p);
  const auto &ev = es.eigenvalues();
  if (ev.size() >= 2 && ev(ev.size() - 2) >= 1e-8)
    fail(Errc::NotRankOne, "measurement element has rank above one");
  if (ev(ev.size() - 1) < 0.5)
    fail(Errc::NotRankOne, "measurement element is zero");
}

/// nu_{a a'} = tr(P^0_a P^1_a') for Alice's rank-one measurements.
inline Eigen::MatrixXd nu_of_strategy(const QuantumStrategy &s) {
  if (s.alice.size() != 2)
    fail(Errc::ShapeMismatch, "Alice needs exactly two questions");
  const int n = static_cast<int>(s.alice[0].size());
  for (int x = 0; x < 2; ++x)
    for (const CMatrix &p : s.alice[x])
      check_rank_one(p);
  Eigen::MatrixXd nu(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      nu(a, b) = (s.alice[0][a] * s.alice[1][b]).trace().real();
  return nu;
}

/// nu with float entries and, when available, exact entries.
struct NuMatrix {
  Eigen::MatrixXd value;
  std::optional<QMatrix> exact;

  int size() const { return static_cast<int>(value.rows()); }

  static NuMatrix from_exact(const QMatrix &q) {
    NuMatrix nu;
    nu.exact = q;
    const int n = static_cast<int>(q.size());
    nu.value.resize(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(q[i].size()) != n)
        fail(Errc::BadNu, "nu must be square");
      for (int j = 0; j < n; ++j)
        nu.value(i, j) = q[i][j].get_d();
    }
    nu.validate();
    return nu;
  }
  static NuMatrix from_double(const Eigen::MatrixXd &m) {
    NuMatrix nu;
    nu.value = m;
    nu.validate();
    return nu;
  }

  void validate() const {
    const int n = size();
    if (n < 1 || value.cols() != n)
      fail(Errc::BadNu, "nu must be square and nonempty");
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (exact ? (*exact)[i][j] <= 0 : value(i, j) <= 0)
          fail(Errc::BadNu, "nu entries must be strictly positive");
        if (exact ? (*exact)[i][j] != (*exact)[j][i] : std::abs(value(i, j) - value(j, i)) > 1e-9)
          fail(Errc::BadNu, "nu must be symmetric");
      }
      if (exact) {
        Rational row = 0;
        for (int j = 0; j < n; ++j)
          row += (*exact)[i][j];
        if (row != 1)
          fail(Errc::BadNu, "nu rows must sum to 1");
      } else if (std::abs(value.row(i).sum() - 1.0) > 1e-9) {
        fail(Errc::BadNu, "nu rows must sum to 1");
      }
    }
  }
};

/// Phases phi_1..phi_{n-1} in [0,1) with sum_{j<n} e^{2 pi i phi_j} a_j + a_n = 0,
/// available when some a_l equals the sum of the others. The result is
/// phi_l = 1/2 and 0 elsewhere; all 1/2 when l = n. `degenerate` selects l.
namespace detail {

inline std::vector<double> phases_for(int n, int l) {
  std::vector<double> phi(n - 1, 0.0);
  if (l == n - 1)
    std::fill(phi.begin(), phi.end(), 0.5);
  else
    phi[l] = 0.5;
  return phi;
}

inline double phase_residual(const std::vector<double> &a, const std::vector<double> &phi) {
  cplx sum = a.back();
  for (std::size_t j = 0; j + 1 < a.size(); ++j)
    sum += std::polar(a[j], 2.0 * kPi * phi[j]);
  return std::abs(sum);
}

} // namespace detail

inline std::vector<double> phase_solve(const std::vector<double> &a, double tol = 1e-9) {
  const int n = static_cast<int>(a.size());
  if (n < 2)
    fail(Errc::InvalidArgument, "phase_solve needs at least two coefficients");
  for (double v : a)
    if (!(v > 0))
      fail(Errc::NonpositiveInput, "coefficients must be positive");
  const double total = std::accumulate(a.begin(), a.end(), 0.0);
  for (int l = 0; l < n; ++l)
    if (std::abs((total - a[l]) - a[l]) <= tol) {
      std::vector<double> phi = detail::phases_for(n, l);
      if (detail::phase_residual(a, phi) <= std::max(1e-10, tol))
        return phi;
    }
  fail(Errc::NoUniqueSolution, "no coefficient equals the sum of the others");
}

/// Exact variant for coefficients given as surds.
inline std::vector<double> phase_solve(const std::vector<SurdSum> &a) {
  const int n = static_cast<int>(a.size());
  if (n < 2)
    fail(Errc::InvalidArgument, "phase_solve needs at least two coefficients");
  SurdSum total;
  for (const SurdSum &v : a) {
    if (!(v.to_double() > 0))
      fail(Errc::NonpositiveInput, "coefficients must be positive");
    total += v;
  }
  for (int l = 0; l < n; ++l)
    if (total - a[l] == a[l])
      return detail::phases_for(n, l);
  fail(Errc::NoUniqueSolution, "no coefficient equals the sum of the others");
}

struct DegeneracyPair {
  int a = 0, b = 0;
  std::optional<int> witness; // l with sum_{k != l} sqrt(nu_ak nu_bk) = sqrt(nu_al nu_bl)
};

struct DegeneracyReport {
  std::vector<DegeneracyPair> pairs; // a < b
  bool pass = false;                 // every pair a != b has a witness
  std::vector<bool> diagonal_holds;  // the same condition with a = b (nu_al = 1/2 for some l)
  bool exact = false;
};

inline DegeneracyReport check_degeneracy_condition(const NuMatrix &nu) {
  nu.validate();
  const int n = nu.size();
  DegeneracyReport rep;
  rep.exact = nu.exact.has_value();
  auto holds = [&](int a, int b, int l) {
    if (nu.exact) {
      const QMatrix &q = *nu.exact;
      SurdSum lhs;
      for (int k = 0; k < n; ++k)
        if (k != l)
          lhs += SurdSum::sqrt_of(q[a][k] * q[b][k]);
      return lhs == SurdSum::sqrt_of(q[a][l] * q[b][l]);
    }
    double lhs = 0;
    for (int k = 0; k < n; ++k)
      if (k != l)
        lhs += std::sqrt(nu.value(a, k) * nu.value(b, k));
    return std::abs(lhs - std::sqrt(nu.value(a, l) * nu.value(b, l))) <= 1e-9;
  };
  rep.pass = true;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      DegeneracyPair pr{a, b, std::nullopt};
      for (int l = 0; l < n && !pr.witness; ++l)
        if (holds(a, b, l))
          pr.witness = l;
      rep.pass = rep.pass && pr.witness.has_value();
      rep.pairs.push_back(pr);
    }
  for (int a = 0; a < n; ++a) {
    bool any = false;
    for (int l = 0; l < n && !any; ++l)
      any = holds(a, a, l);
    rep.diagonal_holds.push_back(any);
  }
  return rep;
}

/// Dephased unitary with |h_ij| = sqrt(nu_ij): first row and column real
/// positive, remaining phases from phase_solve row by row.
inline CMatrix hadamard_like_from_nu(const NuMatrix &nu) {
  nu.validate();
  const int n = nu.size();
  if (n > 4)
    fail(Errc::NotConstructible, "construction is limited to n <= 4");
  CMatrix H(n, n);
  for (int k = 0; k < n; ++k) {
    H(0, k) = std::sqrt(nu.value(0, k));
    H(k, 0) = std::sqrt(nu.value(k, 0));
  }
  for (int a = 1; a < n; ++a) {
    std::vector<double> phi;
    try {
      if (nu.exact) {
        const QMatrix &q = *nu.exact;
        std::vector<SurdSum> coef;
        for (int k = 1; k < n; ++k)
          coef.push_back(SurdSum::sqrt_of(q[0][k] * q[a][k]));
        coef.push_back(SurdSum::sqrt_of(q[0][0] * q[a][0]));
        phi = phase_solve(coef);
      } else {
        std::vector<double> coef;
        for (int k = 1; k < n; ++k)
          coef.push_back(std::sqrt(nu.value(0, k) * nu.value(a, k)));
        coef.push_back(std::sqrt(nu.value(0, 0) * nu.value(a, 0)));
        phi = phase_solve(coef);
      }
    } catch (const Error &e) {
      fail(Errc::NotConstructible, "rows 0 and " + std::to_string(a) + ": " + e.what());
    }
    for (int k = 1; k < n; ++k)
      H(a, k) = std::polar(std::sqrt(nu.value(a, k)), 2.0 * kPi * phi[k - 1]);
  }
  // Snap numerically tiny imaginary parts from e^{i pi}.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(H(i, j).imag()) < 1e-15)
        H(i, j) = H(i, j).real();
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (std::abs(H.row(a).conjugate().dot(H.row(b))) > 1e-10)
        fail(Errc::NotConstructible,
             "rows " + std::to_string(a) + " and " + std::to_string(b) + " are not orthogonal");
  return H;
}

struct BiasedRep {
  int n = 0;
  std::vector<CMatrix> E, F;
  CMatrix H;
};

inline BiasedRep nu_biased_rep(const NuMatrix &nu) {
  const int n = nu.size();
  if (n != 2 && n != 3)
    fail(Errc::NotConstructible, "representations are built for n = 2 or 3");
  DegeneracyReport rep = check_degeneracy_condition(nu);
  if (!rep.pass)
    fail(Errc::NotConstructible, "degeneracy condition fails");
  BiasedRep r;
  r.n = n;
  r.H = hadamard_like_from_nu(nu);
  for (int i = 0; i < n; ++i) {
    CVector e = CVector::Zero(n);
    e(i) = 1;
    r.E.push_back(e * e.adjoint());
    CVector h = r.H.col(i);
    r.F.push_back(h * h.adjoint());
  }
  return r;
}

/// Alice's two measurements of a strategy as a pair of PVMs.
inline BiasedRep rep_of_strategy(const QuantumStrategy &s) {
  BiasedRep r;
  r.n = s.dim_a;
  r.E = s.alice.at(0);
  r.F = s.alice.at(1);
  return r;
}

/// max_ij |E_i F_j E_i - nu_ij E_i|.
inline double biased_residual(const BiasedRep &r, const Eigen::MatrixXd &nu) {
  double worst = 0;
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j)
      worst = std::max(worst,
                       (r.E[i] * r.F[j] * r.E[i] - nu(i, j) * r.E[i]).cwiseAbs().maxCoeff());
  return worst;
}

/// Searches permutations (s, t) with nu2(s(i), t(j)) = nu1(i, j) and a unitary U
/// with U E1_i U* = E2_s(i), U F1_j U* = F2_t(j). Rank-one families only.
inline std::optional<CMatrix> unitary_equivalence_check(const BiasedRep &r1, const BiasedRep &r2,
                                                        double tol = 1e-9) {
  const int n = r1.n;
  if (r2.n != n || static_cast<int>(r1.E.size()) != n || static_cast<int>(r2.E.size()) != n)
    return std::nullopt;
  auto overlaps = [n](const BiasedRep &r) {
    Eigen::MatrixXd nu(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        nu(i, j) = (r.E[i] * r.F[j]).trace().real();
    return nu;
  };
  const Eigen::MatrixXd nu1 = overlaps(r1), nu2 = overlaps(r2);
  std::vector<CVector> v1, w1, v2, w2;
  for (int i = 0; i < n; ++i) {
    v1.push_back(range_vector(r1.E[i]));
    w1.push_back(range_vector(r1.F[i]));
    v2.push_back(range_vector(r2.E[i]));
    w2.push_back(range_vector(r2.F[i]));
  }
  std::vector<int> s(n), t(n);
  std::iota(s.begin(), s.end(), 0);
  do {
    std::iota(t.begin(), t.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          ok = std::abs(nu2(s[i], t[j]) - nu1(i, j)) <= tol;
      if (!ok)
        continue;
      // U v1_i = c_i v2_s(i); the j = 0 overlaps fix the c_i.
      CMatrix U = CMatrix::Zero(n, n);
      bool degenerate = false;
      for (int i = 0; i < n; ++i) {
        cplx num = v2[s[i]].dot(w2[t[0]]);
        cplx den = v1[i].dot(w1[0]);
        if (std::abs(den) < 1e-12) {
          degenerate = true;
          break;
        }
        cplx c = num / den;
        c /= std::abs(c);
        U += c * v2[s[i]] * v1[i].adjoint();
      }
      if (degenerate)
        continue;
      bool good = (U * U.adjoint() - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <= tol;
      for (int i = 0; i < n && good; ++i) {
        good = (U * r1.E[i] * U.adjoint() - r2.E[s[i]]).cwiseAbs().maxCoeff() <= tol &&
               (U * r1.F[i] * U.adjoint() - r2.F[t[i]]).cwiseAbs().maxCoeff() <= tol;
      }
      if (good)
        return U;
    } while (std::next_permutation(t.begin(), t.end()));
  } while (std::next_permutation(s.begin(), s.end()));
  return std::nullopt;
}

/// Conjugation of nu by a simultaneous relabeling of both measurements.
inline NuMatrix permute_nu(const NuMatrix &nu, const std::vector<int> &perm) {
  const int n = nu.size();
  if (nu.exact) {
    QMatrix q(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        q[perm[i]][perm[j]] = (*nu.exact)[i][j];
    return NuMatrix::from_exact(q);
  }
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(perm[i], perm[j]) = nu.value(i, j);
  return NuMatrix::from_double(m);
}

struct ResidualReport {
  double value = 0;
  double epsilon = 0; // 9/16 - value
  std::vector<double> gamma;    // order of gamma_polynomials()
  std::vector<double> relation; // order of relation_set()
  double max_residual = 0;
  std::optional<double> ratio; // max_residual / sqrt(epsilon) when epsilon > 0
};

inline ResidualReport determining_residuals(const QuantumStrategy &s) {
  Game g = feige();
  Correlation c = correlation_of_quantum(g, s);
  ResidualReport r;
  r.value = eval_correlation(g, c).real;
  r.epsilon = 9.0 / 16.0 - r.value;
  const std::vector<NcPoly> gammas = gamma_polynomials();
  for (int y = 0; y < 2; ++y)
    for (int b = 0; b < 3; ++b) {
      NcPoly diff = NcPoly::bob_gen(y, b, 3) - gammas[y * 3 + b];
      double v = (represent(diff, s) * s.state).norm();
      r.gamma.push_back(v);
      r.max_residual = std::max(r.max_residual, v);
    }
  for (const NcPoly &rel : relation_set(paper_nu())) {
    double v = (represent(rel, s) * s.state).norm();
    r.relation.push_back(v);
    r.max_residual = std::max(r.max_residual, v);
  }
  if (r.epsilon > 0)
    r.ratio = r.max_residual / std::sqrt(r.epsilon);
  return r;
}

/// Classical deterministic strategy as one-dimensional PVMs.
inline QuantumStrategy embed_deterministic(const Game &g, const DeterministicStrategy &d) {
  check_deterministic(g, d);
  QuantumStrategy s;
  s.state = CVector::Ones(1);
  s.alice.assign(g.x_size(), std::vector<CMatrix>(g.a_size(), CMatrix::Zero(1, 1)));
  s.bob.assign(g.y_size(), std::vector<CMatrix>(g.b_size(), CMatrix::Zero(1, 1)));
  for (int x = 0; x < g.x_size(); ++x)
    s.alice[x][d.f[x]](0, 0) = 1;
  for (int y = 0; y < g.y_size(); ++y)
    s.bob[y][d.g[y]](0, 0) = 1;
  return s;
}

/// Haar-like random unitary (QR of a complex Gaussian matrix).
template <class Rng> CMatrix random_unitary(int n, Rng &rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = cplx(N(rng), N(rng));
  Eigen::HouseholderQR<CMatrix> qr(m);
  return qr.householderQ() * CMatrix::Identity(n, n);
}

/// Random projective strategy: each measurement splits a random orthonormal
/// basis among the outcomes (rank one when dim equals the outcome count).
template <class Rng>
QuantumStrategy random_quantum_strategy(const Game &g, int dim_a, int dim_b, Rng &rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  QuantumStrategy s;
  s.dim_a = dim_a;
  s.dim_b = dim_b;
  s.state = CVector(dim_a * dim_b);
  for (Eigen::Index i = 0; i < s.state.size(); ++i)
    s.state(i) = cplx(N(rng), N(rng));
  s.state.normalize();
  auto pvms = [&](int questions, int answers, int dim) {
    std::vector<std::vector<CMatrix>> out(questions);
    for (int q = 0; q < questions; ++q) {
      CMatrix u = random_unitary(dim, rng);
      std::vector<int> owner(dim);
      if (dim == answers) {
        std::iota(owner.begin(), owner.end(), 0);
        std::shuffle(owner.begin(), owner.end(), rng);
      } else {
        std::uniform_int_distribution<int> pick(0, answers - 1);
        for (int &o : owner)
          o = pick(rng);
      }
      out[q].assign(answers, CMatrix::Zero(dim, dim));
      for (int k = 0; k < dim; ++k)
        out[q][owner[k]] += u.col(k) * u.col(k).adjoint();
    }
    return out;
  };
  s.alice = pvms(g.x_size(), g.a_size(), dim_a);
  s.bob = pvms(g.y_size(), g.b_size(), dim_b);
  return s;
}

} // namespace nlg

#endif // NLG_QUANTUM_HPP
