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

#include "rational.hpp"

#include <cctype>
#include <cstdlib>

namespace symdyn {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& ctx) {
  if (s.empty()) fail(ErrorCode::parse, "empty integer in " + ctx);
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    fail(ErrorCode::parse, "bad integer '" + s + "' in " + ctx);
  }
  if (pos != s.size()) fail(ErrorCode::parse, "bad integer '" + s + "' in " + ctx);
  return v;
}

std::int64_t pow10_checked(int e) {
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) {
    if (v > 900'000'000'000'000'000LL / 10) fail(ErrorCode::parse, "exponent too large");
    v *= 10;
  }
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorCode::parse, "empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t n = parse_int(text.substr(0, slash), "rational");
    std::int64_t d = parse_int(text.substr(slash + 1), "rational");
    if (d == 0) fail(ErrorCode::parse, "zero denominator in '" + text + "'");
    return Rational(n, d);
  }
  auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    std::int64_t mant = parse_int(text.substr(0, epos), "rational mantissa");
    std::int64_t exp = parse_int(text.substr(epos + 1), "rational exponent");
    if (exp >= 0) return Rational(mant * pow10_checked(static_cast<int>(exp)), 1);
    return Rational(mant, pow10_checked(static_cast<int>(-exp)));
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (tail.empty()) fail(ErrorCode::parse, "bad decimal '" + text + "'");
    bool neg = !head.empty() && head[0] == '-';
    std::int64_t ip = head.empty() || head == "-" ? 0 : parse_int(head, "rational");
    std::int64_t fp = parse_int(tail, "rational fraction");
    if (fp < 0) fail(ErrorCode::parse, "bad decimal '" + text + "'");
    std::int64_t scale = pow10_checked(static_cast<int>(tail.size()));
    std::int64_t mag = (ip < 0 ? -ip : ip) * scale + fp;
    return Rational(neg || ip < 0 ? -mag : mag, scale);
  }
  return Rational(parse_int(text, "rational"), 1);
}

}  // namespace symdyn
