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

#include "group.hpp"

#include <random>

#include "doctest.h"

using namespace symdyn;

namespace {

GroupElement z(std::int64_t v) { return GroupElement{{v}}; }

GroupElement random_free_word(std::mt19937_64& rng, const GroupModel& g, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(1, g.rank());
  std::uniform_int_distribution<int> sign_dist(0, 1);
  GroupElement e = g.identity();
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    std::int64_t l = letter_dist(rng);
    if (sign_dist(rng)) l = -l;
    e = g.mul(e, GroupElement{{l}});
  }
  return e;
}

}  // namespace

TEST_CASE("ball examples over Z") {
  GroupModel g = GroupModel::lattice(1);
  CHECK(g.ball(0).size() == 0);
  CHECK(g.ball(1).elements() == std::vector<GroupElement>{z(0)});
  // enumerate |v| <= 2 directly as the oracle
  std::vector<GroupElement> expect;
  for (std::int64_t v = -2; v <= 2; ++v) expect.push_back(z(v));
  CHECK(g.ball(3) == FiniteSubset(g, expect));
}

TEST_CASE("ball monotonicity, symmetry and growth on all models") {
  for (const auto& g : {GroupModel::lattice(1), GroupModel::lattice(2), GroupModel::free_group(2),
                        GroupModel::cyclic(12)}) {
    for (int n = 0; n <= 8; ++n) {
      FiniteSubset b = g.ball(n);
      CHECK(b.is_symmetric());
      CHECK(b.subset_of(g.ball(n + 1)));
      if (n >= 1) CHECK(b.contains(g.identity()));
    }
    // strictly exhausting until the group runs out (cyclic saturates)
    if (g.kind() != GroupKind::cyclic) CHECK(g.ball(8).size() > g.ball(7).size());
  }
  // cyclic group is finite: the balls must reach everything
  GroupModel c = GroupModel::cyclic(12);
  CHECK(c.ball(7).size() == 12);
}

TEST_CASE("set_product examples") {
  GroupModel g = GroupModel::lattice(1);
  FiniteSubset s(g, {z(-1), z(0), z(1)});
  CHECK(set_product(FiniteSubset(g, {z(0)}), s) == s);
  std::vector<GroupElement> expect;
  for (std::int64_t v = -2; v <= 2; ++v) expect.push_back(z(v));
  CHECK(set_product(s, s) == FiniteSubset(g, expect));

  GroupModel f2 = GroupModel::free_group(2);
  FiniteSubset a(f2, {f2.parse_element("a")});
  FiniteSubset ainv(f2, {f2.parse_element("A")});
  CHECK(set_product(a, ainv) == FiniteSubset(f2, {f2.identity()}));
}

TEST_CASE("set_product rejects mixed models") {
  GroupModel g1 = GroupModel::lattice(1), g2 = GroupModel::lattice(2);
  FiniteSubset a(g1, {z(0)});
  FiniteSubset b(g2, {GroupElement{{0, 0}}});
  CHECK_THROWS_AS(set_product(a, b), Error);
}

TEST_CASE("is_separated examples") {
  GroupModel g = GroupModel::lattice(1);
  FiniteSubset f(g, {z(-1), z(0), z(1)});
  CHECK(is_separated(f, FiniteSubset(g, {z(7)})));             // singleton: no distinct pairs
  CHECK(is_separated(f, FiniteSubset(g, {z(0), z(3)})));       // {-1,0,1} vs {2,3,4}
  CHECK_FALSE(is_separated(f, FiniteSubset(g, {z(0), z(2)})));  // both cover 1
}

TEST_CASE("free group canonical forms: multiply-then-reduce is canonical") {
  GroupModel g = GroupModel::free_group(2);
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 10000; ++trial) {
    GroupElement a = random_free_word(rng, g, 8);
    GroupElement b = random_free_word(rng, g, 8);
    GroupElement ab = g.mul(a, b);
    g.check_element(ab);  // reduced normal form
    // (ab) b^-1 = a and a^-1 (ab) = b
    CHECK(g.mul(ab, g.inverse(b)) == a);
    CHECK(g.mul(g.inverse(a), ab) == b);
  }
}

TEST_CASE("set_product associativity on random triples") {
  std::mt19937_64 rng(99);
  for (const auto& g : {GroupModel::lattice(1), GroupModel::free_group(2)}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto random_subset = [&](int count) {
        std::vector<GroupElement> e;
        for (int i = 0; i < count; ++i) {
          if (g.kind() == GroupKind::free_group)
            e.push_back(random_free_word(rng, g, 3));
          else
            e.push_back(z(static_cast<std::int64_t>(rng() % 9) - 4));
        }
        return FiniteSubset(g, e);
      };
      FiniteSubset a = random_subset(3), b = random_subset(3), c = random_subset(3);
      CHECK(set_product(set_product(a, b), c) == set_product(a, set_product(b, c)));
    }
  }
}

TEST_CASE("element parsing round-trips") {
  GroupModel g2 = GroupModel::lattice(2);
  GroupElement e = g2.parse_element("(3,-4)");
  CHECK(g2.format(e) == "(3,-4)");
  GroupModel f = GroupModel::free_group(3);
  CHECK(f.format(f.parse_element("abC")) == "abC");
  CHECK(f.parse_element("aA") == f.identity());
  GroupModel c = GroupModel::cyclic(5);
  CHECK(c.format(c.parse_element("-1")) == "4");
}
