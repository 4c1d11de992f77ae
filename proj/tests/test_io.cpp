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


#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using namespace nlg;

TEST(Io, RationalRoundTrip) {
  // Integers print with an explicit denominator.
  for (const char *s : {"0/1", "9/16", "-3/7", "12/1"})
    EXPECT_EQ(to_string(rational_from_json(rational_json(parse_rational(s)))), s);
  EXPECT_EQ(rational_from_json(Json("6/8")), Rational(3, 4));
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
  EXPECT_THROW(rational_from_json(Json(0.5)), Error);
}

TEST(Io, GameRoundTrip) {
  const Game g = feige();
  const Game h = game_from_json(game_json(g));
  EXPECT_EQ(h.prior_table(), g.prior_table());
  EXPECT_EQ(h.predicate_table(), g.predicate_table());
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    int dims[4];
    for (int &d : dims)
      d = 1 + static_cast<int>(rng() % 3);
    const Game r = oracle::random_game(dims[0], dims[1], dims[2], dims[3], rng);
    const Game back = game_from_json(Json::parse(game_json(r).dump()));
    ASSERT_EQ(back.prior_table(), r.prior_table());
    ASSERT_EQ(back.predicate_table(), r.predicate_table());
  }
}

TEST(Io, GameJsonErrors) {
  Json j = game_json(chsh());
  j["predicate"] = std::string(j["predicate"].get<std::string>().size(), '2');
  try {
    game_from_json(j);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
  }
  j = game_json(chsh());
  j["prior"][0][0] = "1";
  try {
    game_from_json(j);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::NonstochasticPrior);
  }
  j = game_json(chsh());
  j.erase("prior");
  EXPECT_THROW(game_from_json(j), Error);
}

TEST(Io, CertificateRoundTrip) {
  SosCertificate c;
  c.lambda = Rational(9, 16);
  c.basis = appendix_basis();
  c.Y.assign(c.basis.size(), std::vector<Rational>(c.basis.size(), Rational(0)));
  for (std::size_t i = 0; i < c.basis.size(); ++i)
    c.Y[i][i] = parse_rational(std::to_string(i + 1) + "/7");
  const SosCertificate d = certificate_from_json(Json::parse(certificate_json(c).dump()));
  EXPECT_EQ(d.lambda, c.lambda);
  EXPECT_EQ(d.Y, c.Y);
  ASSERT_EQ(d.basis.size(), c.basis.size());
  for (std::size_t i = 0; i < c.basis.size(); ++i)
    EXPECT_EQ(d.basis[i], c.basis[i]);
}

TEST(Io, Fnv1a) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_NE(fnv1a_hex("a"), fnv1a_hex("b"));
}

} // namespace
