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

#ifndef NLG_NCPOLY_HPP
#define NLG_NCPOLY_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nlg/game.hpp"
#include "nlg/strategies.hpp"

namespace nlg {

/// Generator p^x_a (or q^y_b) packed as (question << 8) | answer.
using Letter = std::uint16_t;

inline constexpr Letter make_letter(int question, int answer) {
  return static_cast<Letter>((question << 8) | answer);
}
inline constexpr int letter_question(Letter l) { return l >> 8; }
inline constexpr int letter_answer(Letter l) { return l & 0xff; }

inline constexpr int kDegreeCap = 12;

/// Bipartite word: Alice letters and Bob letters (the two sides commute).
struct Word {
  std::vector<Letter> alice, bob;

  std::size_t degree() const { return alice.size() + bob.size(); }
  bool empty() const { return alice.empty() && bob.empty(); }

  /// Graded order: total degree, then Alice part, then Bob part.
  bool operator<(const Word &o) const {
    if (degree() != o.degree())
      return degree() < o.degree();
    return std::tie(alice, bob) < std::tie(o.alice, o.bob);
  }
  bool operator==(const Word &o) const = default;

  Word adjoint() const {
    return {std::vector<Letter>(alice.rbegin(), alice.rend()),
            std::vector<Letter>(bob.rbegin(), bob.rend())};
  }
  bool is_normal() const {
    for (std::size_t i = 1; i < alice.size(); ++i)
      if (letter_question(alice[i]) == letter_question(alice[i - 1]))
        return false;
    for (std::size_t i = 1; i < bob.size(); ++i)
      if (letter_question(bob[i]) == letter_question(bob[i - 1]))
        return false;
    return true;
  }
};

namespace detail {

/// Appends `tail` to `head` with the rewrite rules applied at each step:
/// p^x_a p^x_a -> p^x_a and p^x_a p^x_b -> 0 for a != b. Returns false on zero.
inline bool append_reduced(std::vector<Letter> &head, const std::vector<Letter> &tail) {
  for (Letter l : tail) {
    if (!head.empty() && letter_question(head.back()) == letter_question(l)) {
      if (head.back() != l)
        return false;
      continue;
    }
    head.push_back(l);
  }
  return true;
}

} // namespace detail

/// Reduces an arbitrary word of generators; nullopt means the word is zero.
inline std::optional<Word> reduce_word(const Word &w) {
  Word out;
  if (!detail::append_reduced(out.alice, w.alice) || !detail::append_reduced(out.bob, w.bob))
    return std::nullopt;
  return out;
}

inline std::optional<Word> mul_words(const Word &u, const Word &v) {
  Word out = u;
  if (!detail::append_reduced(out.alice, v.alice) || !detail::append_reduced(out.bob, v.bob))
    return std::nullopt;
  return out;
}

/// Noncommutative polynomial with exact coefficients over normal-form words.
class NcPoly {
public:
  using Terms = std::map<Word, Rational>;

  NcPoly() = default;
  NcPoly(const Rational &c) { // NOLINT: constants convert implicitly
    if (c != 0) {
      terms_[Word{}] = c;
      terms_[Word{}].canonicalize();
    }
  }
  NcPoly(int c) : NcPoly(Rational(c)) {} // NOLINT

  static NcPoly word(const Word &w, const Rational &c = 1) {
    NcPoly p;
    if (c == 0)
      return p;
    if (auto r = reduce_word(w)) {
      check_degree(*r);
      p.terms_[*r] = c;
      p.terms_[*r].canonicalize();
    }
    return p;
  }
  static NcPoly alice(int x, int a) { return word(Word{{make_letter(x, a)}, {}}); }
  static NcPoly bob(int y, int b) { return word(Word{{}, {make_letter(y, b)}}); }

  /// Generator for answer a of a player with `answers` outcomes; the last
  /// outcome is eliminated as 1 - sum of the others.
  static NcPoly alice_gen(int x, int a, int answers) {
    if (a < answers - 1)
      return alice(x, a);
    NcPoly p(1);
    for (int k = 0; k + 1 < answers; ++k)
      p -= alice(x, k);
    return p;
  }
  static NcPoly bob_gen(int y, int b, int answers) {
    if (b < answers - 1)
      return bob(y, b);
    NcPoly p(1);
    for (int k = 0; k + 1 < answers; ++k)
      p -= bob(y, k);
    return p;
  }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant() const { return coefficient(Word{}); }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto &[w, c] : terms_)
      d = std::max(d, w.degree());
    return d;
  }

  void add_term(const Word &w, const Rational &c) {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  NcPoly &operator+=(const NcPoly &o) {
    for (const auto &[w, c] : o.terms_)
      add_term(w, c);
    return *this;
  }
  NcPoly &operator-=(const NcPoly &o) {
    for (const auto &[w, c] : o.terms_)
      add_term(w, -c);
    return *this;
  }
  NcPoly &operator*=(const Rational &s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto &[w, c] : terms_)
      c *= s;
    return *this;
  }

  friend NcPoly operator+(NcPoly a, const NcPoly &b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly &b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
  friend NcPoly operator*(NcPoly a, const Rational &s) { return a *= s; }
  friend NcPoly operator*(const Rational &s, NcPoly a) { return a *= s; }

  friend NcPoly operator*(const NcPoly &p, const NcPoly &q) {
    NcPoly r;
    for (const auto &[u, cu] : p.terms_)
      for (const auto &[v, cv] : q.terms_)
        if (auto w = mul_words(u, v)) {
          check_degree(*w);
          r.add_term(*w, cu * cv);
        }
    return r;
  }

  bool operator==(const NcPoly &o) const { return terms_ == o.terms_; }

  NcPoly adjoint() const {
    NcPoly r;
    for (const auto &[w, c] : terms_)
      r.add_term(w.adjoint(), c);
    return r;
  }
  bool is_self_adjoint() const { return adjoint() == *this; }

private:
  static void check_degree(const Word &w) {
    if (w.degree() > static_cast<std::size_t>(kDegreeCap))
      fail(Errc::DegreeCap, "word degree exceeds " + std::to_string(kDegreeCap));
  }

  Terms terms_;
};

inline NcPoly adjoint(const NcPoly &p) { return p.adjoint(); }

/// Re-reduces every word (a fixed point on polynomials built through the API).
inline NcPoly normal_form(const NcPoly &p) {
  NcPoly r;
  for (const auto &[w, c] : p.terms())
    r += NcPoly::word(w, c);
  return r;
}

/// Unreduced product of generators; answers may include the eliminated one.
struct RawTerm {
  Rational coef = 1;
  std::vector<std::pair<int, int>> alice, bob; // (question, answer)
};

inline NcPoly normal_form(const std::vector<RawTerm> &raw, int a_size, int b_size) {
  NcPoly r;
  for (const RawTerm &t : raw) {
    NcPoly term(t.coef);
    for (auto [x, a] : t.alice)
      term = term * NcPoly::alice_gen(x, a, a_size);
    for (auto [y, b] : t.bob)
      term = term * NcPoly::bob_gen(y, b, b_size);
    r += term;
  }
  return r;
}

// Text form: p<x><a>, q<y><b>, I, rational literals, '*', '+', '-'.

inline std::string word_to_string(const Word &w) {
  if (w.empty())
    return "I";
  std::string s;
  auto emit = [&](char tag, Letter l) {
    if (!s.empty())
      s += '*';
    s += tag;
    s += std::to_string(letter_question(l));
    s += std::to_string(letter_answer(l));
  };
  for (Letter l : w.alice)
    emit('p', l);
  for (Letter l : w.bob)
    emit('q', l);
  return s;
}

inline std::string to_string(const NcPoly &p) {
  if (p.is_zero())
    return "0";
  std::string s;
  for (const auto &[w, c] : p.terms()) {
    Rational mag = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (w.empty()) {
      s += to_short_string(mag);
    } else {
      if (mag != 1)
        s += to_short_string(mag) + " ";
      s += word_to_string(w);
    }
  }
  return s;
}

/// Parses the text form. Answer digits equal to a_size-1 (resp. b_size-1)
/// denote the eliminated outcome and are expanded.
inline NcPoly parse_poly(const std::string &text, int a_size = 3, int b_size = 3) {
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto error = [&](const std::string &why) {
    fail(Errc::ParseError, why + " at offset " + std::to_string(i) + " in '" + text + "'");
  };
  auto number = [&]() {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i < text.size() && text[i] == '/') {
      ++i;
      std::size_t den = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (den == i)
        error("missing denominator");
    }
    return parse_rational(text.substr(start, i - start));
  };
  NcPoly result;
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) {
      if (first)
        error("empty polynomial");
      break;
    }
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      error("expected '+' or '-'");
    }
    first = false;
    NcPoly term(sign);
    bool any = false, need_factor = false;
    while (true) {
      skip();
      if (i >= text.size())
        break;
      char ch = text[i];
      need_factor = false;
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        term *= number();
      } else if (ch == 'I') {
        ++i;
      } else if (ch == 'p' || ch == 'q') {
        if (i + 2 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])) ||
            !std::isdigit(static_cast<unsigned char>(text[i + 2])))
          error("generator needs two digits");
        int qn = text[i + 1] - '0', an = text[i + 2] - '0';
        i += 3;
        if (ch == 'p') {
          if (an >= a_size)
            error("Alice answer out of range");
          term = term * NcPoly::alice_gen(qn, an, a_size);
        } else {
          if (an >= b_size)
            error("Bob answer out of range");
          term = term * NcPoly::bob_gen(qn, an, b_size);
        }
      } else {
        break;
      }
      any = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        need_factor = true;
      }
    }
    if (need_factor)
      error("dangling '*'");
    if (!any)
      error("empty term");
    result += term;
  }
  return result;
}

/// Phi_G = sum prior(x,y) V(a,b|x,y) p^x_a q^y_b with eliminated last outcomes.
inline NcPoly game_polynomial(const Game &game) {
  NcPoly phi;
  for (int x = 0; x < game.x_size(); ++x)
    for (int y = 0; y < game.y_size(); ++y) {
      if (game.prior(x, y) == 0)
        continue;
      for (int a = 0; a < game.a_size(); ++a) {
        NcPoly left;
        for (int b = 0; b < game.b_size(); ++b)
          if (game.wins(a, b, x, y))
            left += NcPoly::bob_gen(y, b, game.b_size());
        if (left.is_zero())
          continue;
        phi += game.prior(x, y) * (NcPoly::alice_gen(x, a, game.a_size()) * left);
      }
    }
  return phi;
}

/// The 32 polynomials f_1..f_32 spanning the SOS certificate for feige().
inline const std::vector<std::string> &appendix_basis_text() {
  static const std::vector<std::string> text = {
      "p00*p11*p00 - 1/16 p00",
      "p01*p11*p01 - 9/16 p01",
      "p10*p01*p10 - 1/16 p10",
      "p11*p01*p11 - 9/16 p11",
      "p00*p10*p00 - 9/16 p00",
      "p10*p00*p10 - 9/16 p10",
      "p01*p10*p01 - 1/16 p01",
      "p11*p00*p11 - 1/16 p11",
      "3/4 p10*p01 + 3/4 p01*p10 + 5/4 p01*p11 + 5/4 p11*p01 + 5/16 p00 - 3/8 p10 - 9/16 p01 - 15/8 p11 + q00",
      "3/4 p10*p01 + 3/4 p01*p10 + 5/4 p01*p11 + 5/4 p11*p01 - 3/16 p00 + 1/8 p10 - 33/16 p01 - 3/8 p11 + q01",
      "3/4 p10*p01 + 3/4 p01*p10 + 5/4 p01*p11 + 5/4 p11*p01 + 9/16 p00 - 9/8 p10 - 13/16 p01 - 9/8 p11 + q10",
      "3/4 p10*p01 + 3/4 p01*p10 + 5/4 p01*p11 + 5/4 p11*p01 - 15/16 p00 + 3/8 p10 - 21/16 p01 - 5/8 p11 + q11",
      "I + 2/3 p10*p01 + 2/3 p01*p10 + 2 p01*p11 + 2 p11*p01 - 1/2 p00 - 2/3 p10 - 13/6 p01 - 2 p11",
      "p00*q00 - 3/8 p10*p01 - 3/4 p01*p10 + 3/4 p11*p00 + 1/8 p11*p01 - 5/32 p00 + 3/16 p10 + 3/32 p01 - 3/16 p11",
      "p00*q10 + 3/8 p10*p01 + 9/4 p01*p10 - 9/4 p11*p00 - 5/8 p11*p01 + 9/32 p00 - 9/16 p10 - 3/32 p01 + 9/16 p11",
      "p10*q00 + 9/8 p10*p01 + 15/8 p01*p10 + 5/8 p01*p11 - 15/8 p11*p00 + 15/32 p00 - 9/16 p10 - 15/32 p01",
      "p10*q10 + 7/8 p10*p01 + 21/8 p01*p10 + 7/8 p01*p11 - 21/8 p11*p00 + 21/32 p00 - 21/16 p10 - 21/32 p01",
      "p00*q01 + 9/8 p10*p01 - 3/4 p01*p10 + 3/4 p11*p00 + 5/8 p11*p01 - 9/32 p00 + 3/16 p10 - 9/32 p01 - 3/16 p11",
      "p00*q11 + 7/8 p10*p01 - 7/4 p01*p10 + 7/4 p11*p00 + 7/8 p11*p01 - 35/32 p00 + 7/16 p10 - 7/32 p01 - 7/16 p11",
      "p10*q01 - 3/8 p10*p01 + 3/8 p01*p10 + 1/8 p01*p11 - 3/8 p11*p00 + 3/32 p00 - 1/16 p10 - 3/32 p01",
      "p10*q11 + 3/8 p10*p01 - 15/8 p01*p10 - 5/8 p01*p11 + 15/8 p11*p00 - 15/32 p00 + 3/16 p10 + 15/32 p01",
      "p01*q00 + 3/8 p01*p10 - 5/8 p01*p11 + 3/16 p01",
      "p01*q10 - 3/8 p01*p10 + 1/8 p01*p11 - 1/16 p01",
      "p11*q00 + 7/8 p11*p00 + 7/8 p11*p01 - 21/16 p11",
      "p11*q10 + 9/8 p11*p00 + 5/8 p11*p01 - 9/16 p11",
      "p01*q01 + 7/8 p01*p10 + 7/8 p01*p11 - 21/16 p01",
      "p01*q11 + 9/8 p01*p10 + 5/8 p01*p11 - 9/16 p01",
      "p11*q01 + 3/8 p11*p00 - 5/8 p11*p01 + 3/16 p11",
      "p11*q11 - 3/8 p11*p00 + 1/8 p11*p01 - 1/16 p11",
      "p00*p10 + 3 p01*p10 - 3 p11*p00 - p11*p01 - 3/4 p10 + 3/4 p11",
      "p10*p00 - 3 p01*p10 - p01*p11 + 3 p11*p00 - 3/4 p00 + 3/4 p01",
      "p00*p11 - p10*p01 - p01*p10 + p11*p00 - 1/4 p00 + 1/4 p10 + 1/4 p01 - 1/4 p11"  };
  return text;
}

inline std::vector<NcPoly> appendix_basis() {
  std::vector<NcPoly> out;
  for (const std::string &s : appendix_basis_text())
    out.push_back(parse_poly(s));
  return out;
}

/// gamma^y_b in the order (y, b) = (0,0),(0,1),(0,bot),(1,0),(1,1),(1,bot).
inline std::vector<NcPoly> gamma_polynomials() {
  const NcPoly shared = parse_poly("-3/4 p01*p10 - 3/4 p10*p01 - 5/4 p01*p11 - 5/4 p11*p01");
  // Linear coefficients of p00, p10, p01, p11.
  const std::array<std::array<const char *, 4>, 4> lin = {{
      {"-5/16", "3/8", "9/16", "15/8"},
      {"3/16", "-1/8", "33/16", "3/8"},
      {"-9/16", "9/8", "13/16", "9/8"},
      {"15/16", "-3/8", "21/16", "5/8"},
  }};
  const std::array<std::pair<int, int>, 4> gens = {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  std::vector<NcPoly> out;
  for (int y = 0; y < 2; ++y) {
    NcPoly sum;
    for (int b = 0; b < 2; ++b) {
      NcPoly g = shared;
      for (int k = 0; k < 4; ++k)
        g += parse_rational(lin[2 * y + b][k]) * NcPoly::alice(gens[k].first, gens[k].second);
      sum += g;
      out.push_back(g);
    }
    out.push_back(NcPoly(1) - sum);
  }
  return out;
}

/// The paper's nu for the optimal Feige strategy; rows/cols are 0, 1, bot.
inline std::vector<std::vector<Rational>> paper_nu() {
  return {{Rational(9, 16), Rational(1, 16), Rational(3, 8)},
          {Rational(1, 16), Rational(9, 16), Rational(3, 8)},
          {Rational(3, 8), Rational(3, 8), Rational(1, 4)}};
}

/// p^x_a p^{1-x}_{a'} p^x_a - nu_{a a'} p^x_a for x in {0,1}, a, a' in {0,1,bot},
/// ordered by (x, a, a').
inline std::vector<NcPoly> relation_set(const std::vector<std::vector<Rational>> &nu) {
  if (nu.size() != 3)
    fail(Errc::BadNu, "nu must be 3x3");
  for (int i = 0; i < 3; ++i) {
    if (nu[i].size() != 3)
      fail(Errc::BadNu, "nu must be 3x3");
    Rational row = 0;
    for (int j = 0; j < 3; ++j) {
      row += nu[i][j];
      if (nu[i][j] != nu[j][i])
        fail(Errc::BadNu, "nu is not symmetric");
    }
    if (row != 1)
      fail(Errc::BadNu, "nu rows must sum to 1");
  }
  std::vector<NcPoly> out;
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 3; ++a)
      for (int ap = 0; ap < 3; ++ap) {
        NcPoly p = NcPoly::alice_gen(x, a, 3);
        out.push_back(p * NcPoly::alice_gen(1 - x, ap, 3) * p - nu[a][ap] * p);
      }
  return out;
}

using QMatrix = std::vector<std::vector<Rational>>;

struct SosCertificate {
  std::vector<NcPoly> basis;
  QMatrix Y;
  Rational lambda = 0;
};

/// Exact LDL^T; true iff every pivot is positive.
inline bool rational_pd_check(const QMatrix &Y) {
  const std::size_t n = Y.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (Y[i].size() != n)
      fail(Errc::NotSymmetric, "matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (Y[i][j] != Y[j][i])
        fail(Errc::NotSymmetric, "matrix is not symmetric");
  }
  QMatrix A = Y;
  for (std::size_t k = 0; k < n; ++k) {
    if (A[k][k] <= 0)
      return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (A[i][k] == 0)
        continue;
      Rational f = A[i][k] / A[k][k];
      for (std::size_t j = k + 1; j <= i; ++j)
        if (A[k][j] != 0)
          A[i][j] -= f * A[k][j];
      for (std::size_t j = k + 1; j <= i; ++j)
        A[j][i] = A[i][j];
    }
  }
  return true;
}

/// sum_ij Y_ij F_i^* F_j.
inline NcPoly sos_expand(const std::vector<NcPoly> &F, const QMatrix &Y) {
  const std::size_t n = F.size();
  std::vector<NcPoly> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    adj[i] = F[i].adjoint();
  NcPoly total;
  for (std::size_t i = 0; i < n; ++i) {
    NcPoly row;
    for (std::size_t j = 0; j < n; ++j)
      if (Y[i][j] != 0)
        row += Y[i][j] * F[j];
    if (!row.is_zero())
      total += adj[i] * row;
  }
  return total;
}

/// Exact check of F^* Y F = lambda - Phi_G plus positive definiteness of Y.
inline bool sos_verify(const SosCertificate &cert, const Game &game) {
  if (cert.Y.size() != cert.basis.size())
    fail(Errc::DimensionMismatch, "Y dimension differs from the basis length");
  for (const auto &row : cert.Y)
    if (row.size() != cert.basis.size())
      fail(Errc::DimensionMismatch, "Y is not square");
  NcPoly target = NcPoly(cert.lambda) - game_polynomial(game);
  if (!(sos_expand(cert.basis, cert.Y) == target))
    return false;
  return rational_pd_check(cert.Y);
}

/// Row-reduces the kernel vectors (indexed by `monomials`, ascending), zeroes entries
/// below 1e-7, rationalizes the rest and emits one polynomial per pivot row.
inline std::vector<NcPoly> extract_relations(const std::vector<std::vector<double>> &kernel,
                                             const std::vector<Word> &monomials,
                                             std::int64_t bound) {
  std::vector<NcPoly> out;
  if (kernel.empty())
    return out;
  const int k = static_cast<int>(kernel.size()), n = static_cast<int>(monomials.size());
  Eigen::MatrixXd M(k, n);
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(kernel[i].size()) != n)
      fail(Errc::DimensionMismatch, "kernel vector length differs from the monomial count");
    for (int j = 0; j < n; ++j)
      M(i, j) = kernel[i][j];
  }
  // Reduced row echelon form with partial pivoting. Pivot columns are tried
  // Bob-containing words first, then by descending degree, so each relation
  // rewrites a leading word in terms of short Alice words.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
    const Word &a = monomials[u], &b = monomials[v];
    return std::make_tuple(!a.bob.empty(), a.degree(), u) >
           std::make_tuple(!b.bob.empty(), b.degree(), v);
  });
  int row = 0;
  for (int col : order) {
    if (row >= k)
      break;
    Eigen::Index piv;
    double best = M.col(col).segment(row, k - row).cwiseAbs().maxCoeff(&piv);
    if (best < 1e-9)
      continue;
    M.row(row).swap(M.row(row + piv));
    M.row(row) /= M(row, col);
    for (int i = 0; i < k; ++i)
      if (i != row)
        M.row(i) -= M(i, col) * M.row(row);
    ++row;
  }
  for (int i = 0; i < row; ++i) {
    NcPoly p;
    for (int j = 0; j < n; ++j)
      if (std::abs(M(i, j)) >= 1e-7)
        p += NcPoly::word(monomials[j], rationalize(M(i, j), bound));
    if (!p.is_zero())
      out.push_back(p);
  }
  return out;
}

// Evaluation in a concrete strategy: p^x_a -> P^x_a (x) I, q^y_b -> I (x) Q^y_b.

inline CMatrix word_matrix(const std::vector<Letter> &w,
                           const std::vector<std::vector<CMatrix>> &ops, int dim) {
  CMatrix m = CMatrix::Identity(dim, dim);
  for (Letter l : w)
    m = m * ops[letter_question(l)][letter_answer(l)];
  return m;
}

/// Matrix of the polynomial on H_A (x) H_B (Alice index major).
inline CMatrix represent(const NcPoly &p, const QuantumStrategy &s) {
  const int d = s.dim_a * s.dim_b;
  CMatrix out = CMatrix::Zero(d, d);
  for (const auto &[w, c] : p.terms()) {
    CMatrix a = word_matrix(w.alice, s.alice, s.dim_a);
    CMatrix b = word_matrix(w.bob, s.bob, s.dim_b);
    out += c.get_d() * kron(a, b);
  }
  return out;
}

} // namespace nlg

#endif // NLG_NCPOLY_HPP
