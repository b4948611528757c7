// Copyright 2026 The symdyn authors
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

#ifndef SYMDYN_CERTIFY_HPP
#define SYMDYN_CERTIFY_HPP

#include <optional>
#include <string>

#include "subshift.hpp"

namespace symdyn {

// Expansivity data for subshifts: the constant 1/2 always works, with
// witness K(2^-n) = Omega_{n+1}.
struct ExpansivityCertificate {
  Rational constant;     // 1/2
  FiniteSubset witness;  // K for the requested epsilon
  bool verified = false;
};

// K = Omega_{n+1} for eps = 2^-n. In verify mode, exhaustively checks on
// all pattern pairs over a window containing K * Omega_{n+1} that
// agreement within c on K forces agreement on Omega_{n+1}.
ExpansivityCertificate uniform_expansivity_witness(const Subshift& x, const Rational& eps,
                                                   bool verify = true,
                                                   std::size_t budget = 1u << 22);

enum class CheckVerdict { certified, refuted, inconclusive };

struct CheckResult {
  CheckVerdict verdict = CheckVerdict::inconclusive;
  FiniteSubset gap;  // the Delta that was tested
  int margin = 0;    // rank-2 verification margin (0 = exact)
  std::string detail;
  // populated on refutation
  std::optional<Pattern> witness_a;
  std::optional<Pattern> witness_b;

  std::string verdict_str() const {
    switch (verdict) {
      case CheckVerdict::certified: return "certified";
      case CheckVerdict::refuted: return "refuted";
      case CheckVerdict::inconclusive: return "inconclusive";
    }
    return "?";
  }
};

// Strong irreducibility (weak specification, symbolic form): patterns on
// box supports A1, A2 inside a budget-sized window with A1*Delta
// disjoint from A2 must admit a common extension in X. Exact for rank 1;
// margin-backed search for rank 2.
CheckResult check_strong_irreducibility(const Subshift& x, const FiniteSubset& delta, int window_budget,
                                        int margin = 2);

// Splicability (strong topological Markov property, symbolic form):
// for every box A inside the budget window and points x, y agreeing on
// A*Delta minus A, the splice (x on A, y elsewhere) stays admissible.
CheckResult check_splicable(const Subshift& x, const FiniteSubset& delta, int window_budget,
                            int margin = 2);

}  // namespace symdyn

#endif  // SYMDYN_CERTIFY_HPP
