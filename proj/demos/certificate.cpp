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


// Derives an exact SOS certificate for the 9/16 bound and writes it as JSON.

#include <cstdio>

#include "nlg/nlg.hpp"

int main(int argc, char **argv) {
  const char *out = argc > 1 ? argv[1] : "certificate.json";
  const nlg::Rational lambda(9, 16);
  const auto basis = nlg::appendix_basis();
  const nlg::FeasibilityResult fr = nlg::feasibility_sdp(basis, lambda, 1e-4, nlg::feige());
  std::printf("float margin %.3e\n", fr.margin);
  const nlg::SosCertificate cert = nlg::round_certificate(basis, fr.Y, lambda, nlg::feige());
  const bool ok = nlg::sos_verify(cert, nlg::feige());
  std::printf("exact verification: %s\n", ok ? "pass" : "fail");
  nlg::write_json_file(out, nlg::certificate_json(cert));
  std::printf("wrote %s\n", out);
  return ok ? 0 : 1;
}
