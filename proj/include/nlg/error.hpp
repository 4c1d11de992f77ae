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

#ifndef NLG_ERROR_HPP
#define NLG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nlg {

enum class Errc {
  NonstochasticPrior,
  ShapeMismatch,
  OverflowGuard,
  NotAStrategy,
  BudgetExceeded,
  Infeasible,
  Unbounded,
  DegreeCap,
  BadNu,
  DimensionMismatch,
  NotSymmetric,
  ParseError,
  SizeBudget,
  NumericalFailure,
  RoundingFailed,
  DomainError,
  NotRankOne,
  NoUniqueSolution,
  NonpositiveInput,
  NotConstructible,
  InvalidArgument,
};

inline const char *errc_name(Errc c) {
  switch (c) {
  case Errc::NonstochasticPrior: return "NonstochasticPrior";
  case Errc::ShapeMismatch: return "ShapeMismatch";
  case Errc::OverflowGuard: return "OverflowGuard";
  case Errc::NotAStrategy: return "NotAStrategy";
  case Errc::BudgetExceeded: return "BudgetExceeded";
  case Errc::Infeasible: return "Infeasible";
  case Errc::Unbounded: return "Unbounded";
  case Errc::DegreeCap: return "DegreeCap";
  case Errc::BadNu: return "BadNu";
  case Errc::DimensionMismatch: return "DimensionMismatch";
  case Errc::NotSymmetric: return "NotSymmetric";
  case Errc::ParseError: return "ParseError";
  case Errc::SizeBudget: return "SizeBudget";
  case Errc::NumericalFailure: return "NumericalFailure";
  case Errc::RoundingFailed: return "RoundingFailed";
  case Errc::DomainError: return "DomainError";
  case Errc::NotRankOne: return "NotRankOne";
  case Errc::NoUniqueSolution: return "NoUniqueSolution";
  case Errc::NonpositiveInput: return "NonpositiveInput";
  case Errc::NotConstructible: return "NotConstructible";
  case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// All library failures are reported through this type; code() identifies the kind.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string &what) { throw Error(code, what); }

} // namespace nlg

#endif // NLG_ERROR_HPP
