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

#ifndef NLG_RATIONAL_HPP
#define NLG_RATIONAL_HPP

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "nlg/error.hpp"

namespace nlg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n", "n/d" or "-n/d". The result is canonicalized.
inline Rational parse_rational(const std::string &text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty())
    fail(Errc::ParseError, "empty rational literal");
  std::size_t slash = s.find('/');
  auto digits_ok = [](const std::string &t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+'))
      ++i;
    if (i == t.size())
      return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    fail(Errc::ParseError, "bad rational literal '" + text + "'");
  if (num[0] == '+')
    num.erase(0, 1);
  Integer d(den);
  if (d == 0)
    fail(Errc::ParseError, "zero denominator in '" + text + "'");
  Rational r{Integer(num), d};
  r.canonicalize();
  return r;
}

/// Always "num/den", including integers ("1/1").
inline std::string to_string(const Rational &r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Compact form for polynomial printing ("3", "-1/16").
inline std::string to_short_string(const Rational &r) { return r.get_str(); }

inline double to_double(const Rational &r) { return r.get_d(); }

/// Exact conversion of a finite double.
inline Rational from_double(double x) { return Rational(x); }

/// Best rational approximation with denominator <= max_den (continued
/// fractions with the semiconvergent step at the end).
inline Rational rationalize(double x, std::int64_t max_den) {
  if (!std::isfinite(x))
    fail(Errc::DomainError, "cannot rationalize a non-finite value");
  if (max_den < 1)
    fail(Errc::InvalidArgument, "denominator bound must be positive");
  Rational target(x);
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest = target;
  for (int iter = 0; iter < 128; ++iter) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) {
      Integer k = (Integer(max_den) - q0) / q1;
      Rational semi(k * p1 + p0, k * q1 + q0);
      Rational conv(p1, q1);
      semi.canonicalize();
      conv.canonicalize();
      return abs(semi - target) < abs(conv - target) ? semi : conv;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational frac = rest - Rational(a);
    if (frac == 0)
      break;
    rest = 1 / frac;
  }
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}

} // namespace nlg

#endif // NLG_RATIONAL_HPP
