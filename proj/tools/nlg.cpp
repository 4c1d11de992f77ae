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


// Command-line front end.

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nlg/nlg.hpp"

namespace {

using nlg::Json;
using nlg::Rational;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Context {
  bool json = false;
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json timings = Json::object();
  bool pass = true;
};

void render(std::ostream &os, const Json &j, int indent) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json &v = it.value();
    os << pad << it.key() << ": ";
    if (v.is_object() && v.contains("exact") && v["exact"].is_string()) {
      os << v["exact"].get<std::string>() << " (" << v["decimal"].get<double>() << ")\n";
    } else if (v.is_object() && v.contains("decimal") && v.contains("tolerance")) {
      os << v["decimal"].get<double>() << " (+/- " << v["tolerance"].get<double>() << ")\n";
    } else if (v.is_object()) {
      os << "\n";
      render(os, v, indent + 2);
    } else if (v.is_string()) {
      os << v.get<std::string>() << "\n";
    } else {
      os << v.dump() << "\n";
    }
  }
}

int finish(Context &ctx, Clock::time_point start) {
  ctx.timings["total_s"] = seconds_since(start);
  Json report = {{"command", ctx.command},
                 {"inputs_hash", nlg::fnv1a_hex(ctx.command + "|" + ctx.inputs.dump())},
                 {"inputs", ctx.inputs},
                 {"results", ctx.results},
                 {"timings", ctx.timings},
                 {"pass", ctx.pass},
                 {"version", nlg::kVersion}};
  if (ctx.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout.precision(12);
    render(std::cout, ctx.results, 0);
    std::cout << (ctx.pass ? "PASS" : "FAIL") << "\n";
  }
  return ctx.pass ? 0 : 1;
}

nlg::Game builtin_game(const std::string &name) {
  if (name == "feige")
    return nlg::feige();
  if (name == "feige_sync")
    return nlg::feige_sync();
  if (name == "chsh")
    return nlg::chsh();
  if (name == "guess1")
    return nlg::guessing_components().first;
  if (name == "guess2")
    return nlg::guessing_components().second;
  if (name == "orgame") {
    auto [g1, g2] = nlg::guessing_components();
    return nlg::or_game(g1, g2);
  }
  if (name.rfind("feige^", 0) == 0)
    return nlg::parallel_repeat(nlg::feige(), std::stoi(name.substr(6)));
  return nlg::game_from_json(nlg::read_json_file(name));
}

Json report_json(const nlg::SearchReport &r) {
  return {{"optimum", nlg::value_json(nlg::Value::of(r.optimum))},
          {"complete", r.complete},
          {"nodes_explored", r.nodes_explored},
          {"pruned", r.pruned},
          {"witness", nlg::strategy_json(r.witness)}};
}

// Values of parallel repetitions of feige().

struct ClassicalArgs {
  std::int64_t budget = 1000000;
  bool extended = false;
  int jobs = 1;
  std::string seed = "auto";
};

/// {"alice": [...], "bob": [...]} with one answer index per question.
nlg::DeterministicStrategy read_strategy(const std::string &path, const nlg::Game &g) {
  const Json j = nlg::read_json_file(path);
  nlg::DeterministicStrategy s;
  try {
    s.f = j.at("alice").get<std::vector<int>>();
    s.g = j.at("bob").get<std::vector<int>>();
  } catch (const Json::exception &e) {
    nlg::fail(nlg::Errc::ParseError, "seed strategy: " + std::string(e.what()));
  }
  if (static_cast<int>(s.f.size()) != g.x_size() || static_cast<int>(s.g.size()) != g.y_size())
    nlg::fail(nlg::Errc::NotAStrategy, "seed strategy has the wrong number of questions");
  for (int a : s.f)
    if (a < 0 || a >= g.a_size())
      nlg::fail(nlg::Errc::NotAStrategy, "seed strategy answer out of range");
  for (int b : s.g)
    if (b < 0 || b >= g.b_size())
      nlg::fail(nlg::Errc::NotAStrategy, "seed strategy answer out of range");
  return s;
}

Json classical_value(int n, const ClassicalArgs &a) {
  if (n == 4) {
    nlg::Game g = nlg::parallel_repeat(nlg::feige(), 4);
    Rational v = nlg::eval_deterministic(g, nlg::classical_pair_strategy(2));
    return {{"value", nlg::value_json(nlg::Value::of(v))},
            {"provenance", "strategy witness + even-n theorem"}};
  }
  nlg::Game g = nlg::parallel_repeat(nlg::feige(), n);
  if (n <= 2) {
    auto r = nlg::classical_value_exhaustive(g);
    Json j = report_json(r);
    j["value"] = j["optimum"];
    j["provenance"] = "computed exactly (exhaustive)";
    return j;
  }
  nlg::BnbOptions opt;
  opt.budget = a.extended ? std::numeric_limits<std::int64_t>::max() : a.budget;
  opt.jobs = a.jobs;
  opt.symmetries = nlg::repetition_symmetries(nlg::feige(), n);
  if (a.seed != "none" && n == 3)
    opt.incumbent = nlg::classical_three_strategy();
  auto r = nlg::classical_value_bnb(g, opt);
  Json j = report_json(r);
  if (r.complete) {
    j["value"] = j["optimum"];
    j["provenance"] = "computed exactly (branch and bound)";
  } else {
    j["lower_bound"] = j["optimum"];
    j["upper_bound"] = nlg::value_json(nlg::Value::of(Rational(1, 3)));
    j["provenance"] = "lower bound (B&B budget hit); upper bound from the NS value";
  }
  return j;
}

Json ns_value(int n, nlg::Backend backend, bool symmetry, const std::string &export_path) {
  if (n == 4)
    return {{"value", nlg::value_json(nlg::Value::of(Rational(1, 4)))},
            {"provenance", "even-n theorem + strategy witness"}};
  nlg::Game g = nlg::parallel_repeat(nlg::feige(), n);
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    nlg::write_lp(out, nlg::ns_lp(g));
  }
  std::vector<nlg::Relabeling> sym;
  if (symmetry && n > 1)
    sym = nlg::repetition_symmetries(nlg::feige(), n);
  nlg::NsResult r = nlg::ns_value(g, backend, {}, sym);
  Json j = {{"value", nlg::value_json(r.value, 1e-9)},
            {"float_value", r.float_value},
            {"promoted", r.promoted},
            {"dual_certified", r.dual_certified},
            {"witness_nonsignalling", nlg::is_nonsignalling(r.witness)},
            {"lp_rows", r.rows},
            {"lp_vars", r.vars},
            {"symmetry_reduced", !sym.empty()},
            {"iterations", r.iterations}};
  j["provenance"] = backend == nlg::Backend::Exact
                        ? "computed exactly (rational simplex)"
                        : (r.promoted ? "computed numerically, witness verified exactly"
                                      : "computed numerically");
  return j;
}

Json quantum_value(int n) {
  if (n == 1) {
    const double ub = nlg::quantum_upper_bound(nlg::feige(), nlg::parse_level("1+AB"));
    const double lb = nlg::eval_correlation(
                          nlg::feige(), nlg::correlation_of_quantum(
                                            nlg::feige(), nlg::feige_optimal_strategy(0.75)))
                          .real;
    return {{"value", nlg::value_json(nlg::Value::of(Rational(9, 16)))},
            {"strategy_value", nlg::value_json(nlg::Value::of(lb), 1e-10)},
            {"npa_1+AB", nlg::value_json(nlg::Value::of(ub), 1e-6)},
            {"provenance", "strategy + NPA bound (exact SOS via `sos derive`)"}};
  }
  if (n == 2 || n == 4) {
    const Rational v(1, n == 2 ? 2 : 4);
    return {{"value", nlg::value_json(nlg::Value::of(v))},
            {"provenance", n == 2 ? "sandwich (classical = NS)"
                                  : "sandwich (even-n theorem + strategy)"}};
  }
  Json j = {{"value", "?"},
            {"lower_bound", nlg::value_json(nlg::Value::of(Rational(5, 16)))},
            {"upper_bound", nlg::value_json(nlg::Value::of(Rational(1, 3)))},
            {"provenance", "unknown (open question); classical witness and NS bounds"}};
  try {
    nlg::build_moment_sdp(nlg::parallel_repeat(nlg::feige(), 3), nlg::parse_level("1"), false);
  } catch (const nlg::Error &e) {
    j["npa_level_1"] = e.what();
  }
  return j;
}

} // namespace

int main(int argc, char **argv) {
  const auto start = Clock::now();
  Context ctx;
  // The output format flag does not change the computation, so it stays out of the hash.
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) != "--json")
      ctx.command += (ctx.command.empty() ? "" : " ") + std::string(argv[i]);

  CLI::App app{"Nonlocal game values, relaxations and certificates"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "Print the JSON report");
  app.set_version_flag("--version", nlg::kVersion);

  // values
  int n = 1;
  std::string which = "classical";
  ClassicalArgs cargs;
  auto *values = app.add_subcommand("values", "Value of the n-fold repetition of the Feige game");
  values->add_option("--n", n, "Repetitions (1-4)")->check(CLI::Range(1, 4));
  values->add_option("--which", which, "classical | quantum | ns")
      ->check(CLI::IsMember({"classical", "quantum", "ns"}));
  values->add_option("--budget", cargs.budget, "B&B node budget without --extended");
  values->add_flag("--extended", cargs.extended, "Run the n=3 classical search to completion");
  values->add_option("--jobs", cargs.jobs, "Parallel B&B root tasks");

  // table
  auto *table = app.add_subcommand("table", "Table of classical, quantum and NS values, n=1..4");
  table->add_option("--budget", cargs.budget, "B&B node budget without --extended");
  table->add_flag("--extended", cargs.extended, "Run the n=3 classical search to completion");
  table->add_option("--jobs", cargs.jobs, "Parallel B&B root tasks");

  // classical
  std::string game_name = "feige";
  std::string method = "auto";
  auto *classical = app.add_subcommand("classical", "Classical value of a game");
  classical->add_option("--game", game_name, "Builtin name (feige, feige^3, chsh, ...) or JSON file");
  classical->add_option("--method", method, "auto | exhaustive | bnb")
      ->check(CLI::IsMember({"auto", "exhaustive", "bnb"}));
  classical->add_option("--budget", cargs.budget, "B&B node budget without --extended");
  classical->add_flag("--extended", cargs.extended, "No node budget");
  classical->add_option("--jobs", cargs.jobs, "Parallel B&B root tasks");
  classical->add_option("--seed-strategy", cargs.seed, "auto | none | JSON file {alice, bob}");

  // ns-value
  std::string backend_name = "exact";
  bool no_symmetry = false;
  std::string export_path;
  auto *ns = app.add_subcommand("ns-value", "Non-signalling value of the n-fold repetition");
  ns->add_option("--n", n, "Repetitions (1-3)")->check(CLI::Range(1, 3));
  ns->add_option("--backend", backend_name, "exact | float")
      ->check(CLI::IsMember({"exact", "float"}));
  ns->add_flag("--no-symmetry", no_symmetry, "Solve the unreduced LP");
  ns->add_option("--export", export_path, "Write the LP in plain-text form");

  // npa
  std::string level = "1+AB";
  bool sync = false;
  std::string cert_out;
  std::string lambda_text;
  std::int64_t denominator = nlg::kCertificateDenominator;
  auto *npa = app.add_subcommand("npa", "NPA relaxation");
  npa->require_subcommand(1);
  auto *npa_solve = npa->add_subcommand("solve", "Solve the moment relaxation");
  npa_solve->add_option("--game", game_name, "Builtin name or JSON file");
  npa_solve->add_option("--level", level, "Level, e.g. 1+AB or 1+AB+A^2+A^3");
  npa_solve->add_flag("--sync", sync, "Add synchronicity constraints");
  npa_solve->add_option("--emit-certificate", cert_out,
                        "Round an SOS certificate over the level's monomials to this file");
  npa_solve->add_option("--lambda", lambda_text, "Certificate bound (default: value + 1/1024)");
  npa_solve->add_option("--denominator", denominator, "Rationalization bound");

  // sos
  double epsilon = 1e-4;
  std::string cert_path = "certificate.json";
  auto *sos = app.add_subcommand("sos", "SOS certificates over the 32-element basis");
  sos->require_subcommand(1);
  auto *derive = sos->add_subcommand("derive", "Solve, rationalize and verify a certificate");
  derive->add_option("--lambda", lambda_text, "Bound (default 9/16)");
  derive->add_option("--epsilon", epsilon, "Required smallest eigenvalue");
  derive->add_option("--denominator", denominator, "Rationalization bound");
  derive->add_option("--out", cert_path, "Certificate file");
  auto *verify = sos->add_subcommand("verify", "Exact verification of a certificate");
  verify->add_option("--cert", cert_path, "Certificate file");
  verify->add_option("--game", game_name, "Builtin name or JSON file");

  // selftest
  double p = 0.75;
  auto *selftest = app.add_subcommand("selftest", "Residuals of the determining pair");
  selftest->add_option("--p", p, "Family parameter in [0,1]");

  // nubias
  std::string nu_path;
  auto *nubias = app.add_subcommand("nubias", "nu-biased measurement construction");
  nubias->add_option("--nu", nu_path, "JSON file {\"nu\": [[...]]} (default: the Feige nu)");

  // orgame
  auto *orgame = app.add_subcommand("orgame", "Or-composition of the two guessing games");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  try {
    if (values->parsed()) {
      ctx.inputs = {{"n", n}, {"which", which}, {"budget", cargs.budget},
                    {"extended", cargs.extended}};
      if (which == "classical")
        ctx.results[which] = classical_value(n, cargs);
      else if (which == "ns")
        ctx.results[which] = ns_value(n, n == 3 ? nlg::Backend::Float : nlg::Backend::Exact,
                                      true, "");
      else
        ctx.results[which] = quantum_value(n);
    } else if (table->parsed()) {
      ctx.inputs = {{"budget", cargs.budget}, {"extended", cargs.extended}};
      for (int k = 1; k <= 4; ++k) {
        const std::string key = "n=" + std::to_string(k);
        auto t = Clock::now();
        ctx.results["classical"][key] = classical_value(k, cargs);
        ctx.results["classical"][key].erase("witness");
        ctx.results["ns"][key] =
            ns_value(k, k == 3 ? nlg::Backend::Float : nlg::Backend::Exact, true, "");
        ctx.results["quantum"][key] = quantum_value(k);
        ctx.timings[key + "_s"] = seconds_since(t);
      }
    } else if (classical->parsed()) {
      ctx.inputs = {{"game", game_name}, {"method", method}, {"budget", cargs.budget},
                    {"extended", cargs.extended}, {"jobs", cargs.jobs}};
      nlg::Game g = builtin_game(game_name);
      const double space = std::pow(double(g.b_size()), g.y_size());
      if (method == "exhaustive" || (method == "auto" && space <= nlg::kExhaustiveBudget)) {
        ctx.results["classical"] = report_json(nlg::classical_value_exhaustive(g));
      } else {
        nlg::BnbOptions opt;
        opt.budget = cargs.extended ? std::numeric_limits<std::int64_t>::max() : cargs.budget;
        opt.jobs = cargs.jobs;
        if (game_name.rfind("feige^", 0) == 0) {
          const int k = std::stoi(game_name.substr(6));
          opt.symmetries = nlg::repetition_symmetries(nlg::feige(), k);
          if (k == 3 && cargs.seed == "auto")
            opt.incumbent = nlg::classical_three_strategy();
        }
        if (cargs.seed != "auto" && cargs.seed != "none") {
          opt.incumbent = read_strategy(cargs.seed, g);
          ctx.inputs["seed_strategy"] = cargs.seed;
        }
        ctx.results["classical"] = report_json(nlg::classical_value_bnb(g, opt));
      }
    } else if (ns->parsed()) {
      ctx.inputs = {{"n", n}, {"backend", backend_name}, {"symmetry", !no_symmetry}};
      ctx.results["ns"] = ns_value(
          n, backend_name == "exact" ? nlg::Backend::Exact : nlg::Backend::Float, !no_symmetry,
          export_path);
    } else if (npa_solve->parsed()) {
      ctx.inputs = {{"game", game_name}, {"level", level}, {"sync", sync}};
      nlg::Game g = builtin_game(game_name);
      nlg::MomentProblem mp = nlg::build_moment_sdp(g, nlg::parse_level(level), sync);
      nlg::NpaResult r = nlg::solve_moment_sdp(mp);
      ctx.results["value"] = nlg::value_json(nlg::Value::of(r.value), 1e-6);
      ctx.results["sos_value"] = r.primal_value;
      ctx.results["dimension"] = mp.dim();
      ctx.results["moment_classes"] = mp.classes.size();
      ctx.results["equalities"] = mp.eq_rows.size();
      ctx.results["iterations"] = r.sdp.iterations;
      ctx.results["converged"] = r.sdp.converged;
      if (!sync)
        ctx.results["gram_residual"] = nlg::gram_residual(mp, r.gram, r.primal_value, g);
      if (!cert_out.empty()) {
        Rational lambda = lambda_text.empty()
                              ? nlg::rationalize(std::ceil(r.value * 1024.0) / 1024.0, 1024) +
                                    Rational(1, 1024)
                              : nlg::parse_rational(lambda_text);
        std::vector<nlg::NcPoly> basis;
        for (const nlg::Word &w : mp.index)
          basis.push_back(nlg::NcPoly::word(w));
        auto fr = nlg::feasibility_sdp(basis, lambda, 1e-12, g);
        auto cert = nlg::round_certificate(basis, fr.Y, lambda, g, denominator);
        nlg::write_json_file(cert_out, nlg::certificate_json(cert, g.a_size(), g.b_size()));
        ctx.results["certificate"] = {{"path", cert_out},
                                      {"lambda", nlg::rational_json(lambda)},
                                      {"margin", fr.margin},
                                      {"verified", true}};
      }
    } else if (derive->parsed()) {
      Rational lambda = lambda_text.empty() ? Rational(9, 16) : nlg::parse_rational(lambda_text);
      ctx.inputs = {{"lambda", nlg::rational_json(lambda)}, {"epsilon", epsilon},
                    {"denominator", denominator}};
      auto basis = nlg::appendix_basis();
      auto t = Clock::now();
      nlg::FeasibilityResult fr = nlg::feasibility_sdp(basis, lambda, epsilon, nlg::feige());
      ctx.timings["feasibility_s"] = seconds_since(t);
      ctx.results["margin"] = fr.margin;
      ctx.results["free_parameters"] = fr.free_parameters;
      ctx.results["float_residual"] = nlg::sos_residual(basis, fr.Y, lambda, nlg::feige());
      t = Clock::now();
      nlg::SosCertificate cert =
          nlg::round_certificate(basis, fr.Y, lambda, nlg::feige(), denominator);
      ctx.timings["rounding_s"] = seconds_since(t);
      nlg::write_json_file(cert_path, nlg::certificate_json(cert));
      ctx.results["certificate"] = cert_path;
      ctx.results["verified"] = true;
      ctx.results["upper_bound"] = nlg::value_json(nlg::Value::of(lambda));
    } else if (verify->parsed()) {
      ctx.inputs = {{"cert", cert_path}, {"game", game_name}};
      nlg::SosCertificate cert = nlg::certificate_from_json(nlg::read_json_file(cert_path));
      nlg::Game g = builtin_game(game_name);
      const bool identity =
          cert.Y.size() == cert.basis.size() &&
          nlg::sos_expand(cert.basis, cert.Y) == nlg::NcPoly(cert.lambda) - nlg::game_polynomial(g);
      bool pd = false;
      try {
        pd = nlg::rational_pd_check(cert.Y);
      } catch (const nlg::Error &e) {
        ctx.results["pd_error"] = e.what();
      }
      ctx.results["identity"] = identity;
      ctx.results["positive_definite"] = pd;
      ctx.results["lambda"] = nlg::value_json(nlg::Value::of(cert.lambda));
      ctx.pass = identity && pd;
    } else if (selftest->parsed()) {
      ctx.inputs = {{"p", p}};
      nlg::QuantumStrategy s = nlg::feige_optimal_strategy(p);
      nlg::ResidualReport r = nlg::determining_residuals(s);
      ctx.results["value"] = nlg::value_json(nlg::Value::of(r.value), 1e-10);
      ctx.results["epsilon"] = r.epsilon;
      ctx.results["gamma_residuals"] = r.gamma;
      ctx.results["relation_residuals"] = r.relation;
      ctx.results["max_residual"] = r.max_residual;
      if (r.ratio)
        ctx.results["residual_over_sqrt_epsilon"] = *r.ratio;
      Eigen::MatrixXd nu = nlg::nu_of_strategy(s);
      Json rows = Json::array();
      for (int i = 0; i < nu.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < nu.cols(); ++k)
          row.push_back(nu(i, k));
        rows.push_back(row);
      }
      ctx.results["nu"] = rows;
    } else if (nubias->parsed()) {
      ctx.inputs = {{"nu", nu_path.empty() ? "feige" : nu_path}};
      nlg::NuMatrix nu;
      if (nu_path.empty()) {
        nu = nlg::NuMatrix::from_exact(nlg::paper_nu());
      } else {
        Json j = nlg::read_json_file(nu_path).at("nu");
        bool exact = true;
        for (const Json &row : j)
          for (const Json &v : row)
            exact = exact && v.is_string();
        if (exact) {
          nu = nlg::NuMatrix::from_exact(nlg::qmatrix_from_json(j));
        } else {
          const int k = static_cast<int>(j.size());
          Eigen::MatrixXd m(k, k);
          for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
              m(a, b) = j.at(a).at(b).get<double>();
          nu = nlg::NuMatrix::from_double(m);
        }
      }
      nlg::DegeneracyReport dr = nlg::check_degeneracy_condition(nu);
      Json pairs = Json::array();
      for (const auto &pr : dr.pairs)
        pairs.push_back({{"a", pr.a}, {"b", pr.b},
                         {"witness", pr.witness ? Json(*pr.witness) : Json(nullptr)}});
      ctx.results["degeneracy"] = {{"pairs", pairs},
                                   {"pass", dr.pass},
                                   {"exact", dr.exact},
                                   {"diagonal_holds", dr.diagonal_holds}};
      nlg::BiasedRep rep = nlg::nu_biased_rep(nu);
      Json E = Json::array(), F = Json::array();
      for (int i = 0; i < rep.n; ++i) {
        E.push_back(nlg::cmatrix_json(rep.E[i]));
        F.push_back(nlg::cmatrix_json(rep.F[i]));
      }
      ctx.results["H"] = nlg::cmatrix_json(rep.H);
      ctx.results["E"] = E;
      ctx.results["F"] = F;
      ctx.results["biased_residual"] = nlg::biased_residual(rep, nu.value);
      ctx.results["unitarity_residual"] =
          (rep.H * rep.H.adjoint() - nlg::CMatrix::Identity(rep.n, rep.n)).cwiseAbs().maxCoeff();
    } else if (orgame->parsed()) {
      auto [g1, g2] = nlg::guessing_components();
      nlg::Game og = nlg::or_game(g1, g2);
      auto iso = nlg::find_isomorphism(og, nlg::feige());
      ctx.results["isomorphic_to_feige"] = iso.has_value();
      if (iso)
        ctx.results["relabeling"] = {{"x", iso->x}, {"y", iso->y}, {"a", iso->a}, {"b", iso->b}};
      int idx = 1;
      for (const nlg::Game *c : {&g1, &g2}) {
        const std::string key = "component" + std::to_string(idx++);
        const Rational cv = nlg::classical_value_exhaustive(*c).optimum;
        const nlg::Value nv = nlg::ns_value(*c, nlg::Backend::Exact).value;
        ctx.results[key]["classical"] = nlg::value_json(nlg::Value::of(cv));
        ctx.results[key]["ns"] = nlg::value_json(nv);
        if (nv.is_exact() && nv.exact == cv)
          ctx.results[key]["quantum"] = nlg::value_json(nlg::Value::of(cv));
        ctx.results[key]["quantum_provenance"] =
            nv.is_exact() && nv.exact == cv ? "sandwich (classical = NS)" : "not determined";
      }
      ctx.results["or_game_classical"] =
          nlg::value_json(nlg::Value::of(nlg::classical_value_exhaustive(og).optimum));
      ctx.pass = iso.has_value();
    }
  } catch (const nlg::Error &e) {
    ctx.results["error"] = {{"code", nlg::errc_name(e.code())}, {"message", e.what()}};
    ctx.pass = false;
    finish(ctx, start);
    return 2;
  } catch (const std::exception &e) {
    ctx.results["error"] = {{"code", "Internal"}, {"message", e.what()}};
    ctx.pass = false;
    finish(ctx, start);
    return 2;
  }
  return finish(ctx, start);
}
