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


// Residuals of the determining relations along the optimal family.

#include <cstdio>

#include "nlg/nlg.hpp"

int main() {
  std::printf("%6s %12s %12s %12s\n", "p", "epsilon", "max resid", "resid/sqrt");
  for (int k = 10; k <= 20; ++k) {
    const double p = k / 20.0;
    const nlg::ResidualReport r = nlg::determining_residuals(nlg::feige_optimal_strategy(p));
    std::printf("%6.2f %12.3e %12.3e %12s\n", p, r.epsilon, r.max_residual,
                r.ratio ? std::to_string(*r.ratio).c_str() : "-");
  }
}
