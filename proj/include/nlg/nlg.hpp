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


#ifndef NLG_NLG_HPP
#define NLG_NLG_HPP

#include "nlg/classical.hpp"
#include "nlg/error.hpp"
#include "nlg/game.hpp"
#include "nlg/io.hpp"
#include "nlg/lp.hpp"
#include "nlg/ncpoly.hpp"
#include "nlg/npa.hpp"
#include "nlg/quantum.hpp"
#include "nlg/rational.hpp"
#include "nlg/sdp.hpp"
#include "nlg/strategies.hpp"
#include "nlg/surd.hpp"

namespace nlg {

inline constexpr const char *kVersion = "0.1.0";

} // namespace nlg

#endif // NLG_NLG_HPP
