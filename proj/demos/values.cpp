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


// Classical, quantum and non-signalling values of the base game.

#include <cstdio>

#include "nlg/nlg.hpp"

int main() {
  const nlg::Game g = nlg::feige();
  const nlg::SearchReport c = nlg::classical_value_exhaustive(g);
  std::printf("classical       %s\n", nlg::to_string(c.optimum).c_str());

  const nlg::QuantumStrategy s = nlg::feige_optimal_strategy(0.75);
  const double lower = nlg::eval_correlation(g, nlg::correlation_of_quantum(g, s)).real;
  const double upper = nlg::quantum_upper_bound(g, nlg::parse_level("1+AB"));
  std::printf("quantum         [%.8f, %.8f]\n", lower, upper);

  const nlg::NsResult ns = nlg::ns_value(g, nlg::Backend::Exact);
  std::printf("non-signalling  %s\n", nlg::to_string(ns.value.exact).c_str());
}
