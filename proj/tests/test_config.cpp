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

#include "config.hpp"

#include <random>

#include "doctest.h"

using namespace symdyn;

namespace {
Alphabet bits("01");
GroupElement z(std::int64_t v) { return GroupElement{{v}}; }

Configuration lone_one_at(std::int64_t pos) {
  return Configuration::periodic_z(bits, {0}).with_overrides({{z(pos), 1}});
}

Configuration random_config(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> period_dist(1, 4);
  std::uniform_int_distribution<int> bit(0, 1);
  int pl = period_dist(rng), pr = period_dist(rng);
  std::vector<std::uint8_t> left, right, mid;
  for (int i = 0; i < pl; ++i) left.push_back(static_cast<std::uint8_t>(bit(rng)));
  for (int i = 0; i < pr; ++i) right.push_back(static_cast<std::uint8_t>(bit(rng)));
  int ml = period_dist(rng) - 1;
  for (int i = 0; i < ml; ++i) mid.push_back(static_cast<std::uint8_t>(bit(rng)));
  std::int64_t lo = static_cast<std::int64_t>(rng() % 7) - 3;
  return Configuration::bi_tail(bits, left, lo, mid, right);
}
}  // namespace

TEST_CASE("value lookup across tails and middle") {
  Configuration x = Configuration::bi_tail(bits, {0}, 0, {1}, {0, 1});
  CHECK(x.value_z(0) == 1);
  CHECK(x.value_z(-1) == 0);
  CHECK(x.value_z(-9) == 0);
  CHECK(x.value_z(1) == 0);
  CHECK(x.value_z(2) == 1);
  CHECK(x.value_z(3) == 0);
}

TEST_CASE("normalization: periodic word reduced and anchored") {
  Configuration a = Configuration::periodic_z(bits, {0, 1, 0, 1});
  CHECK(a.right_word().size() == 2);  // primitive
  Configuration b = Configuration::periodic_z(bits, {0, 1});
  CHECK(a == b);
}

TEST_CASE("normalization: removable middle collapses to a periodic point") {
  Configuration a = Configuration::bi_tail(bits, {0, 1}, 2, {0, 1, 0}, {1, 0});
  // values: ...01 010 10... is globally (01)-periodic
  Configuration b = shift_apply(z(0), a);
  Configuration p0 = Configuration::periodic_z(bits, {0, 1});
  Configuration p1 = Configuration::periodic_z(bits, {1, 0});
  bool matches = (b == p0) || (b == p1);
  CHECK(matches);
  CHECK(a.is_periodic());
}

TEST_CASE("equality is decidable across different descriptions") {
  Configuration a = Configuration::periodic_z(bits, {0});
  Configuration b = Configuration::bi_tail(bits, {0}, 5, {}, {0, 0});
  CHECK(a == b);
  Configuration c = lone_one_at(0);
  CHECK_FALSE(a == c);
  // overriding back to the background restores equality
  Configuration d = c.with_overrides({{z(0), 0}});
  CHECK(a == d);
}

TEST_CASE("shift action examples") {
  Configuration x = lone_one_at(0);
  CHECK(shift_apply(z(0), x) == x);
  CHECK(shift_apply(z(1), x) == lone_one_at(1));  // gx(h) = x(h-1)
}

TEST_CASE("shift action axiom on random configurations") {
  std::mt19937_64 rng(7);
  GroupModel g = GroupModel::lattice(1);
  for (int trial = 0; trial < 100; ++trial) {
    Configuration x = random_config(rng);
    std::int64_t a = static_cast<std::int64_t>(rng() % 9) - 4;
    std::int64_t b = static_cast<std::int64_t>(rng() % 9) - 4;
    CHECK(shift_apply(z(a), shift_apply(z(b), x)) == shift_apply(g.mul(z(a), z(b)), x));
  }
}

TEST_CASE("config_distance examples") {
  Configuration x = lone_one_at(0);
  CHECK(config_distance(x, x).is_zero());
  Configuration zeros = Configuration::periodic_z(bits, {0});
  // differ at the identity: agree only on Omega_0
  CHECK(config_distance(x, zeros) == Dyadic::one());
  // agree exactly on Omega_2 = {-1,0,1}: distance 2^-2
  Configuration y = lone_one_at(2);
  CHECK(config_distance(y, zeros) == Dyadic::pow2(2));
}

TEST_CASE("orbit distance examples and monotonicity") {
  GroupModel g = GroupModel::lattice(1);
  Configuration x = lone_one_at(3);
  Configuration zeros = Configuration::periodic_z(bits, {0});
  FiniteSubset identity_only(g, {z(0)});
  CHECK(orbit_distance(identity_only, x, zeros) == config_distance(x, zeros));
  CHECK(orbit_distance(g.ball(3), x, x).is_zero());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Configuration a = random_config(rng), b = random_config(rng);
    Dyadic small = orbit_distance(g.ball(2), a, b);
    Dyadic big = orbit_distance(g.ball(4), a, b);
    CHECK(small <= big);
  }
}

TEST_CASE("metric properties: symmetry, identity, triangle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    Configuration x = random_config(rng), y = random_config(rng), w = random_config(rng);
    Dyadic dxy = config_distance(x, y);
    CHECK(dxy == config_distance(y, x));
    CHECK((dxy.is_zero() == (x == y)));
    // triangle: rho(x,w) <= rho(x,y) + rho(y,w); dyadics make this
    // max-comparable: 2^-n <= 2^-a + 2^-b iff n >= min(a,b) - 1... check numerically
    double lhs = config_distance(x, w).to_double();
    CHECK(lhs <= dxy.to_double() + config_distance(y, w).to_double() + 1e-15);
  }
}

TEST_CASE("rank-2 configurations: values, shifts, equality") {
  Alphabet a01("01");
  Configuration t = Configuration::periodic_lattice(a01, {2, 2}, {0, 1, 1, 0});
  CHECK(t.value(GroupElement{{0, 0}}) == 0);
  CHECK(t.value(GroupElement{{0, 1}}) == 1);
  CHECK(t.value(GroupElement{{5, 3}}) == 0);  // (5 mod 2, 3 mod 2) = (1,1)
  Configuration s = shift_apply(GroupElement{{1, 0}}, t);
  CHECK(s.value(GroupElement{{1, 0}}) == t.value(GroupElement{{0, 0}}));
  // doubling the period leaves the point unchanged
  Configuration big = Configuration::periodic_lattice(
      a01, {4, 2}, {0, 1, 1, 0, 0, 1, 1, 0});
  CHECK(big == t);
  Configuration withov = t.with_overrides({{GroupElement{{0, 0}}, 1}});
  CHECK_FALSE(withov == t);
  CHECK(withov.value(GroupElement{{0, 0}}) == 1);
  CHECK(withov.value(GroupElement{{2, 2}}) == 0);
}
