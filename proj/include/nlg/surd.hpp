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

#ifndef NLG_SURD_HPP
#define NLG_SURD_HPP

#include <cmath>
#include <map>

#include "nlg/rational.hpp"

namespace nlg {

/// Exact sum of terms c * sqrt(s), s a squarefree positive integer. Square
/// roots of distinct squarefree integers are linearly independent over Q, so
/// equality is termwise.
class SurdSum {
public:
  SurdSum() = default;

  /// sqrt(r) for r >= 0.
  static SurdSum sqrt_of(const Rational &r) {
    if (r < 0)
      fail(Errc::DomainError, "square root of a negative rational");
    SurdSum out;
    if (r == 0)
      return out;
    // sqrt(n/d) = sqrt(n d) / d.
    Integer m = r.get_num() * r.get_den();
    Integer square = 1, rest = 1;
    Integer p = 2;
    while (p * p <= m) {
      int e = 0;
      while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++e;
      }
      for (int i = 0; i < e / 2; ++i)
        square *= p;
      if (e % 2)
        rest *= p;
      ++p;
    }
    rest *= m;
    Rational c(square, r.get_den());
    c.canonicalize();
    out.terms_[rest] = c;
    return out;
  }

  SurdSum &operator+=(const SurdSum &o) {
    for (const auto &[s, c] : o.terms_) {
      Rational &v = terms_[s];
      v += c;
      if (v == 0)
        terms_.erase(s);
    }
    return *this;
  }
  friend SurdSum operator+(SurdSum a, const SurdSum &b) { return a += b; }
  friend SurdSum operator-(SurdSum a) {
    for (auto &[s, c] : a.terms_)
      c = -c;
    return a;
  }
  friend SurdSum operator-(SurdSum a, const SurdSum &b) { return a += -b; }

  bool operator==(const SurdSum &o) const { return terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }

  double to_double() const {
    double v = 0;
    for (const auto &[s, c] : terms_)
      v += c.get_d() * std::sqrt(s.get_d());
    return v;
  }

private:
  std::map<Integer, Rational> terms_;
};

} // namespace nlg

#endif // NLG_SURD_HPP
