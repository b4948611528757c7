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

#include "dyadic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace symdyn {

namespace {
using BigInt = boost::multiprecision::cpp_int;

// Returns sign of (sum - bound) where sum = sum of counts * 2^-e.
int compare_sum(const std::map<std::uint32_t, std::int64_t>& counts, const Rational& bound) {
  std::uint32_t emax = 0;
  for (const auto& [e, c] : counts)
    if (c > 0 && e > emax) emax = e;
  // lhs = q * sum * 2^emax, rhs = p * 2^emax, compare lhs vs rhs.
  BigInt lhs = 0;
  for (const auto& [e, c] : counts) {
    if (c == 0) continue;
    BigInt term = c;
    term <<= (emax - e);
    lhs += term;
  }
  lhs *= bound.den;
  BigInt rhs = bound.num;
  rhs <<= emax;
  if (lhs < rhs) return -1;
  if (lhs == rhs) return 0;
  return 1;
}
}  // namespace

bool DyadicSquareSum::less_than(const Rational& bound) const {
  return compare_sum(counts_, bound) < 0;
}

bool DyadicSquareSum::less_equal(const Rational& bound) const {
  return compare_sum(counts_, bound) <= 0;
}

}  // namespace symdyn
