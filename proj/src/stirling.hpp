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

#ifndef SYMDYN_STIRLING_HPP
#define SYMDYN_STIRLING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace symdyn {

// kappa(gamma) = -2(gamma ln gamma + (1-gamma) ln(1-gamma)), gamma in (0, 1/2).
double kappa(const Rational& gamma);

// Least integer d0 >= 2/gamma with exp(kappa x / 2) > x^3 certified for
// all x >= d0 (the comparison is monotone past 6/kappa, which d0 also
// clears; a grid re-check runs on top).
std::int64_t d_zero(const Rational& gamma);

struct TailSlack {
  std::int64_t d;
  double log_sum;  // ln of the exact binomial tail sum
  double slack;    // kappa d - ln sum, positive on a pass
};

struct TailReport {
  std::int64_t d0 = 0;
  double kappa_value = 0;
  std::vector<TailSlack> rows;
  bool all_pass = false;
};

// Exact big-integer check of sum_{j<=floor(gamma d)} C(d,j) <= e^{kappa d}
// for d in [d_lo, d_hi]; the comparison is done in log space with outward
// rounding, so a pass is a certificate. A violation is a hard failure.
TailReport verify_tail_bound(const Rational& gamma, std::int64_t d_lo, std::int64_t d_hi);
// convenience: d in [d_zero(gamma), d_zero(gamma) + span]
TailReport verify_tail_bound_span(const Rational& gamma, std::int64_t span);

// sum_j C(n,j) t^j and (1+t)^n as exact rationals; asserts equality.
// Returns the common value as a decimal string pair (num, den).
std::pair<std::string, std::string> binomial_subset_identity(int n, const Rational& t);

struct FactorialBounds {
  double lower;           // e (m/e)^m
  std::string factorial;  // exact m!
  double upper;           // e m (m/e)^m
};

// Asserts e(m/e)^m <= m! <= e m (m/e)^m with outward-rounded logs.
FactorialBounds stirling_factorial_bounds(int m);

}  // namespace symdyn

#endif  // SYMDYN_STIRLING_HPP
