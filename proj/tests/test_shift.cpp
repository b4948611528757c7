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

#include "subshift.hpp"

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "transfer.hpp"

using namespace symdyn;

namespace {
GroupElement z(std::int64_t v) { return GroupElement{{v}}; }

FiniteSubset interval(const GroupModel& g, std::int64_t lo, std::int64_t hi) {
  std::vector<GroupElement> e;
  for (std::int64_t p = lo; p < hi; ++p) e.push_back(z(p));
  return FiniteSubset(g, e);
}

std::set<std::string> pattern_strings(const Subshift& x, const PatternSet& ps) {
  std::set<std::string> out;
  for (const auto& p : ps.patterns) out.insert(p.str(x.alphabet()));
  return out;
}
}  // namespace

TEST_CASE("full shift pattern enumeration") {
  Subshift x = full_shift(Alphabet("01"), GroupModel::lattice(1));
  auto ps = enumerate_patterns(x, interval(x.group(), 0, 3));
  CHECK(ps.patterns.size() == 8);
  CHECK(ps.exact);
}

TEST_CASE("golden mean pattern enumeration matches the brute-force oracle") {
  Subshift x = golden_mean();
  auto ps = enumerate_patterns(x, interval(x.group(), 0, 3));
  CHECK(pattern_strings(x, ps) ==
        std::set<std::string>{"000", "001", "010", "100", "101"});
  // oracle agreement on lengths 1..7
  for (std::size_t len = 1; len <= 7; ++len) {
    auto expect = oracle::global_words(x, len);
    auto got = enumerate_patterns(x, interval(x.group(), 0, static_cast<std::int64_t>(len)));
    std::set<oracle::Word> got_words;
    for (const auto& p : got.patterns) got_words.insert(p.values);
    CHECK(got_words == expect);
  }
}

TEST_CASE("golden mean counts follow the Fibonacci recurrence") {
  Subshift x = golden_mean();
  std::vector<std::int64_t> counts;
  for (int n = 1; n <= 13; ++n) counts.push_back(x.transfer().count_words(static_cast<std::size_t>(n)));
  CHECK(counts[0] == 2);
  CHECK(counts[1] == 3);
  CHECK(counts[2] == 5);
  CHECK(counts[3] == 8);
  CHECK(counts[4] == 13);
  for (std::size_t n = 2; n < counts.size(); ++n)
    CHECK(counts[n] == counts[n - 1] + counts[n - 2]);
}

TEST_CASE("non-box windows are rejected") {
  Subshift x = golden_mean();
  FiniteSubset gappy(x.group(), {z(0), z(2)});
  CHECK_THROWS_AS(enumerate_patterns(x, gappy), Error);
}

TEST_CASE("periodic points: examples and oracle agreement") {
  Subshift full = full_shift(Alphabet("01"), GroupModel::lattice(1));
  CHECK(periodic_points(full, 3).size() == 8);

  Subshift x = golden_mean();
  CHECK(periodic_points(x, 5).size() == 11);

  Subshift y = zeros_sft();
  for (std::int64_t d : {1, 2, 5, 9}) CHECK(periodic_points(y, d).size() == 1);

  for (std::int64_t d = 3; d <= 16; ++d) {
    auto pts = periodic_points(x, d);
    auto expect = oracle::cyclic_words(x, d);
    CHECK(pts.size() == expect.size());
    CHECK(count_periodic_points(x, d) == static_cast<std::int64_t>(expect.size()));
    for (const auto& p : pts) {
      CHECK(x.contains(p));
      // the cyclic word of the point must be one the oracle found
      oracle::Word w;
      for (std::int64_t i = 0; i < d; ++i) w.push_back(p.value_z(i));
      CHECK(expect.count(w) == 1);
    }
  }
}

TEST_CASE("membership: builders accept and reject the right points") {
  Subshift gm = golden_mean();
  Alphabet a01("01");
  Configuration ok = Configuration::periodic_z(a01, {0, 1, 0});
  CHECK(gm.contains(ok));
  Configuration bad = Configuration::periodic_z(a01, {0, 1, 1});
  CHECK_FALSE(gm.contains(bad));

  // weiss admits ...000 1 222...
  Subshift w = weiss_sft();
  Alphabet a012("012");
  Configuration mono = Configuration::bi_tail(a012, {0}, 0, {1}, {2});
  CHECK(w.contains(mono));
  Configuration back = Configuration::bi_tail(a012, {2}, 0, {1}, {0});
  CHECK_FALSE(w.contains(back));
}

TEST_CASE("hard_ball over Z with F={1} has the golden mean admissible set") {
  GroupModel g = GroupModel::lattice(1);
  Subshift hb = hard_ball(g, FiniteSubset(g, {z(1)}));
  Subshift gm = golden_mean();
  CHECK(hb.memory() == gm.memory());
  CHECK(hb.admissible() == gm.admissible());
  CHECK_THROWS_AS(hard_ball(g, FiniteSubset(g, {z(0), z(1)})), Error);
}

TEST_CASE("hard-ball on Z^2: membership and small torus counts") {
  GroupModel g = GroupModel::lattice(2);
  FiniteSubset f(g, {GroupElement{{1, 0}}, GroupElement{{0, 1}}});
  Subshift hb = hard_ball(g, f);
  Alphabet a01("01");
  Configuration zeros = Configuration::periodic_lattice(a01, {1, 1}, {0});
  CHECK(hb.contains(zeros));
  Configuration ones = Configuration::periodic_lattice(a01, {1, 1}, {1});
  CHECK_FALSE(hb.contains(ones));
  // 2x2 torus: cyclic adjacency forbids any 1 next to a 1; on the 2-torus
  // each cell is its own horizontal and vertical neighbor's neighbor, so
  // count by brute force over 16 candidates
  auto pts = periodic_points(hb, 2);
  std::size_t expect = 0;
  for (int mask = 0; mask < 16; ++mask) {
    auto at = [&](int r, int c) { return (mask >> (2 * (r % 2) + (c % 2))) & 1; };
    bool ok = true;
    for (int r = 0; r < 2 && ok; ++r)
      for (int c = 0; c < 2 && ok; ++c)
        if (at(r, c) && (at(r + 1, c) || at(r, c + 1))) ok = false;
    if (ok) ++expect;
  }
  CHECK(pts.size() == expect);
  for (const auto& p : pts) CHECK(hb.contains(p));
}

TEST_CASE("expansivity: c = 1/2 separates distinct periodic points") {
  Subshift x = golden_mean();
  auto pts = periodic_points(x, 6);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      // locate a differing coordinate: some shift has distance 1 > 1/2
      Dyadic d = orbit_distance(x.group().ball(7), pts[i], pts[j]);
      CHECK(d == Dyadic::one());
    }
}

TEST_CASE("configuration_through_word pumps to a genuine point") {
  Subshift w = weiss_sft();
  Configuration p = configuration_through_word(w, {2});
  CHECK(w.contains(p));
  CHECK(p.value_z(0) == 2);
  Configuration q = configuration_through_word(w, {0, 1, 2});
  CHECK(w.contains(q));
  CHECK(q.value_z(0) == 0);
  CHECK(q.value_z(1) == 1);
  CHECK(q.value_z(2) == 2);
  CHECK_THROWS_AS(configuration_through_word(golden_mean(), {1, 1}), Error);
}
