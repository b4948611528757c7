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

#ifndef SYMDYN_DYADIC_HPP
#define SYMDYN_DYADIC_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "rational.hpp"

namespace symdyn {

// Value of the prodiscrete metric: exactly 0 or 2^-n with n >= 0.
// Kept exact; no floating point enters rho or rho_A.
struct Dyadic {
  bool zero = true;
  std::uint32_t n = 0;  // value = 2^-n when !zero

  static Dyadic zero_value() { return Dyadic{}; }
  static Dyadic pow2(std::uint32_t n) { return Dyadic{false, n}; }
  static Dyadic one() { return Dyadic{false, 0}; }

  bool is_zero() const { return zero; }

  double to_double() const { return zero ? 0.0 : std::ldexp(1.0, -static_cast<int>(n)); }

  std::string str() const {
    if (zero) return "0";
    if (n == 0) return "1";
    return "2^-" + std::to_string(n);
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    if (a.zero || b.zero) return a.zero == b.zero;
    return a.n == b.n;
  }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    if (a.zero) return !b.zero;
    if (b.zero) return false;
    return a.n > b.n;
  }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a < b || a == b; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return b <= a; }

  static Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

  // Exact comparison against a rational threshold: 2^-n >= p/q  <=>  q >= p*2^n.
  bool ge(const Rational& r) const {
    if (r.num <= 0) return true;
    if (zero) return false;
    if (n >= 63) {
      // 2^-n <= 2^-63; compare via cross multiplication in 128 bits.
      __int128 lhs = r.den;
      __int128 rhs = static_cast<__int128>(r.num) << (n >= 127 ? 127 : n);
      if (n >= 127) return false;
      return lhs >= rhs;
    }
    return static_cast<__int128>(r.den) >= (static_cast<__int128>(r.num) << n);
  }
  bool lt(const Rational& r) const { return !ge(r); }
};

// Exact accumulator for sums of squared metric values (terms 4^-n),
// used by the microstate goodness test. Stores per-exponent counts so
// the comparison against d*delta^2 can be done in integers.
class DyadicSquareSum {
 public:
  void add_square(const Dyadic& v) {
    if (v.zero) return;
    counts_[2 * v.n] += 1;
  }

  // sum < bound ?  (bound rational, exact)
  bool less_than(const Rational& bound) const;
  // sum <= bound ?
  bool less_equal(const Rational& bound) const;

  double to_double() const {
    double s = 0;
    for (const auto& [e, c] : counts_) s += static_cast<double>(c) * std::ldexp(1.0, -static_cast<int>(e));
    return s;
  }

 private:
  std::map<std::uint32_t, std::int64_t> counts_;
};

}  // namespace symdyn

#endif  // SYMDYN_DYADIC_HPP
