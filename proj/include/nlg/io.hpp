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


#ifndef NLG_IO_HPP
#define NLG_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "nlg/game.hpp"
#include "nlg/ncpoly.hpp"
#include "nlg/rational.hpp"
#include "nlg/strategies.hpp"

namespace nlg {

using Json = nlohmann::json;

inline Json rational_json(const Rational &r) { return to_string(r); }

inline Rational rational_from_json(const Json &j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<long>());
  fail(Errc::ParseError, "expected a rational string, got " + j.dump());
}

/// Exact values carry "exact" and "decimal"; floats carry "decimal" and "tolerance".
inline Json value_json(const Value &v, double tolerance = 0) {
  if (v.is_exact())
    return {{"exact", to_string(v.exact)}, {"decimal", v.exact.get_d()}};
  return {{"decimal", v.real}, {"tolerance", tolerance}};
}

inline Json game_json(const Game &g) {
  Json prior = Json::array();
  for (int x = 0; x < g.x_size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < g.y_size(); ++y)
      row.push_back(rational_json(g.prior(x, y)));
    prior.push_back(row);
  }
  std::string pred;
  pred.reserve(g.predicate_table().size());
  for (std::uint8_t v : g.predicate_table())
    pred.push_back(v ? '1' : '0');
  Json j = {{"x_size", g.x_size()}, {"y_size", g.y_size()}, {"a_size", g.a_size()},
            {"b_size", g.b_size()}, {"prior", prior},         {"predicate", pred}};
  const Labels &l = g.labels();
  if (!l.x.empty() || !l.a.empty())
    j["labels"] = {{"x", l.x}, {"y", l.y}, {"a", l.a}, {"b", l.b}};
  return j;
}

/// Prior is [x][y]; predicate is a 0/1 string in the order ((a*B+b)*X+x)*Y+y.
inline Game game_from_json(const Json &j) {
  try {
    const int X = j.at("x_size"), Y = j.at("y_size"), A = j.at("a_size"), B = j.at("b_size");
    std::vector<Rational> prior;
    const Json &pj = j.at("prior");
    if (static_cast<int>(pj.size()) != X)
      fail(Errc::ShapeMismatch, "prior must have x_size rows");
    for (const Json &row : pj) {
      if (static_cast<int>(row.size()) != Y)
        fail(Errc::ShapeMismatch, "prior rows must have y_size entries");
      for (const Json &p : row)
        prior.push_back(rational_from_json(p));
    }
    std::vector<std::uint8_t> pred;
    for (char c : j.at("predicate").get<std::string>()) {
      if (c != '0' && c != '1')
        fail(Errc::ParseError, "predicate must be a string of 0 and 1");
      pred.push_back(c == '1');
    }
    Labels labels;
    if (j.contains("labels")) {
      const Json &l = j["labels"];
      labels = {l.value("x", std::vector<std::string>{}), l.value("y", std::vector<std::string>{}),
                l.value("a", std::vector<std::string>{}), l.value("b", std::vector<std::string>{})};
    }
    Game g(X, Y, A, B, std::move(prior), std::move(pred), std::move(labels));
    require_valid(g);
    return g;
  } catch (const Json::exception &e) {
    fail(Errc::ParseError, std::string("game JSON: ") + e.what());
  }
}

inline Json qmatrix_json(const QMatrix &Y) {
  Json rows = Json::array();
  for (const auto &row : Y) {
    Json r = Json::array();
    for (const Rational &v : row)
      r.push_back(rational_json(v));
    rows.push_back(r);
  }
  return rows;
}

inline QMatrix qmatrix_from_json(const Json &j) {
  QMatrix Y;
  for (const Json &row : j) {
    std::vector<Rational> r;
    for (const Json &v : row)
      r.push_back(rational_from_json(v));
    Y.push_back(std::move(r));
  }
  return Y;
}

/// {"lambda":"9/16","basis":["p00*p11*p00 - 1/16 p00", ...],"Y":[["num/den",...]]}
/// with optional "answers":[a_size, b_size] for the polynomial grammar.
inline Json certificate_json(const SosCertificate &c, int a_size = 3, int b_size = 3) {
  Json basis = Json::array();
  for (const NcPoly &f : c.basis)
    basis.push_back(to_string(f));
  Json j = {{"lambda", rational_json(c.lambda)}, {"basis", basis}, {"Y", qmatrix_json(c.Y)}};
  if (a_size != 3 || b_size != 3)
    j["answers"] = {a_size, b_size};
  return j;
}

inline SosCertificate certificate_from_json(const Json &j) {
  try {
    int a_size = 3, b_size = 3;
    if (j.contains("answers")) {
      a_size = j["answers"].at(0);
      b_size = j["answers"].at(1);
    }
    SosCertificate c;
    c.lambda = rational_from_json(j.at("lambda"));
    for (const Json &f : j.at("basis"))
      c.basis.push_back(parse_poly(f.get<std::string>(), a_size, b_size));
    c.Y = qmatrix_from_json(j.at("Y"));
    return c;
  } catch (const Json::exception &e) {
    fail(Errc::ParseError, std::string("certificate JSON: ") + e.what());
  }
}

inline Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(Errc::InvalidArgument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception &e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
}

inline void write_json_file(const std::string &path, const Json &j) {
  std::ofstream out(path);
  if (!out)
    fail(Errc::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << "\n";
}

inline Json strategy_json(const DeterministicStrategy &s) { return {{"alice", s.f}, {"bob", s.g}}; }

inline Json cmatrix_json(const CMatrix &m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      r.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(r);
  }
  return rows;
}

/// FNV-1a over a canonical string, as 16 hex digits.
inline std::string fnv1a_hex(const std::string &text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

} // namespace nlg

#endif // NLG_IO_HPP
