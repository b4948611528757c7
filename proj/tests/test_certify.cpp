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

#include "certify.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace symdyn;

namespace {
GroupElement z(std::int64_t v) { return GroupElement{{v}}; }

FiniteSubset delta_z(std::int64_t radius) {
  GroupModel g = GroupModel::lattice(1);
  std::vector<GroupElement> e;
  for (std::int64_t v = -radius; v <= radius; ++v) e.push_back(z(v));
  return FiniteSubset(g, e);
}

// Direct brute-force gluing search at the same budget: for every pair of
// interval patterns with the gap condition, look for a joint word by raw
// enumeration with pad pumping.
bool brute_force_gluing_holds(const Subshift& x, const FiniteSubset& delta, int budget) {
  for (std::int64_t s1 = 0; s1 < budget; ++s1)
    for (std::int64_t l1 = 1; s1 + l1 <= budget; ++l1)
      for (std::int64_t s2 = 0; s2 < budget; ++s2)
        for (std::int64_t l2 = 1; s2 + l2 <= budget; ++l2) {
          if (std::min(s1, s2) != 0) continue;
          bool disjoint = true;
          for (std::int64_t a = s1; a < s1 + l1 && disjoint; ++a)
            for (const auto& d : delta.elements())
              if (a + d.word[0] >= s2 && a + d.word[0] < s2 + l2) {
                disjoint = false;
                break;
              }
          if (!disjoint) continue;
          std::int64_t lo = std::min(s1, s2), hi = std::max(s1 + l1, s2 + l2);
          auto words1 = oracle::global_words(x, static_cast<std::size_t>(l1));
          auto words2 = oracle::global_words(x, static_cast<std::size_t>(l2));
          for (const auto& w1 : words1)
            for (const auto& w2 : words2) {
              bool glued = false;
              oracle::all_words(x.alphabet().size(), static_cast<std::size_t>(hi - lo),
                                [&](const oracle::Word& w) {
                                  if (glued) return;
                                  for (std::int64_t i = 0; i < l1; ++i)
                                    if (w[static_cast<std::size_t>(s1 + i - lo)] !=
                                        w1[static_cast<std::size_t>(i)])
                                      return;
                                  for (std::int64_t i = 0; i < l2; ++i)
                                    if (w[static_cast<std::size_t>(s2 + i - lo)] !=
                                        w2[static_cast<std::size_t>(i)])
                                      return;
                                  if (oracle::locally_admissible(x, w) &&
                                      oracle::globally_admissible(x, w))
                                    glued = true;
                                });
              if (!glued) return false;
            }
        }
  return true;
}

}  // namespace

TEST_CASE("uniform expansivity witness") {
  Subshift gm = golden_mean();
  auto c1 = uniform_expansivity_witness(gm, Rational(1, 1));
  CHECK(c1.witness == gm.group().ball(1));
  auto c2 = uniform_expansivity_witness(gm, Rational(1, 4));
  CHECK(c2.witness == gm.group().ball(3));
  CHECK(c2.verified);
  Subshift full = full_shift(Alphabet("01"), GroupModel::lattice(1));
  auto c3 = uniform_expansivity_witness(full, Rational(1, 2));
  CHECK(c3.witness == full.group().ball(2));
  CHECK(c3.verified);
}

TEST_CASE("golden mean is strongly irreducible with gap {-1,0,1} at budget 8") {
  auto res = check_strong_irreducibility(golden_mean(), delta_z(1), 8);
  CHECK(res.verdict == CheckVerdict::certified);
}

TEST_CASE("golden mean fails strong irreducibility with the trivial gap") {
  GroupModel g = GroupModel::lattice(1);
  auto res = check_strong_irreducibility(golden_mean(), FiniteSubset(g, {z(0)}), 6);
  CHECK(res.verdict == CheckVerdict::refuted);
  REQUIRE(res.witness_a.has_value());
}

TEST_CASE("weiss sft is not strongly irreducible: 2 before 0 is impossible") {
  auto res = check_strong_irreducibility(weiss_sft(), delta_z(1), 8);
  CHECK(res.verdict == CheckVerdict::refuted);
  REQUIRE(res.witness_a.has_value());
  REQUIRE(res.witness_b.has_value());
  Alphabet a = weiss_sft().alphabet();
  // the lexicographically first refutation: "2" then "0" beyond the gap
  CHECK(res.witness_a->str(a) == "2");
  CHECK(res.witness_b->str(a) == "0");
}

TEST_CASE("checkers agree with the brute-force gluing oracle at small budgets") {
  for (int budget : {4, 5}) {
    for (std::int64_t r : {0, 1}) {
      auto gm = golden_mean();
      auto res = check_strong_irreducibility(gm, delta_z(r), budget);
      bool oracle_ok = brute_force_gluing_holds(gm, delta_z(r), budget);
      if (res.verdict == CheckVerdict::certified) CHECK(oracle_ok);
      if (res.verdict == CheckVerdict::refuted) CHECK_FALSE(oracle_ok);
    }
  }
}

TEST_CASE("splicability certificates") {
  CHECK(check_splicable(golden_mean(), delta_z(1), 8).verdict == CheckVerdict::certified);
  GroupModel g = GroupModel::lattice(1);
  Subshift full = full_shift(Alphabet("01"), g);
  CHECK(check_splicable(full, FiniteSubset(g, {z(0)}), 6).verdict == CheckVerdict::certified);
  CHECK(check_splicable(weiss_sft(), delta_z(1), 8).verdict == CheckVerdict::certified);
  // too small a gap set breaks the splice on the golden mean
  CHECK(check_splicable(golden_mean(), FiniteSubset(g, {z(0)}), 6).verdict ==
        CheckVerdict::refuted);
}

TEST_CASE("splice refutations come with genuine witnesses") {
  GroupModel g = GroupModel::lattice(1);
  auto res = check_splicable(golden_mean(), FiniteSubset(g, {z(0)}), 6);
  REQUIRE(res.verdict == CheckVerdict::refuted);
  REQUIRE(res.witness_a.has_value());
  REQUIRE(res.witness_b.has_value());
  // both sides are admissible patterns; only the splice fails
  Subshift gm = golden_mean();
  const auto& graph_ok = [&](const Pattern& p) {
    return oracle::locally_admissible(gm, p.values) && oracle::globally_admissible(gm, p.values);
  };
  CHECK(graph_ok(*res.witness_a));
  CHECK(graph_ok(*res.witness_b));
}

TEST_CASE("hard-ball on Z^2: both certificates at budget 4, margin 2") {
  GroupModel g = GroupModel::lattice(2);
  FiniteSubset f(g, {GroupElement{{1, 0}}, GroupElement{{0, 1}}});
  Subshift hb = hard_ball(g, f);
  FiniteSubset delta = g.ball(2);  // |g_i| <= 1
  auto si = check_strong_irreducibility(hb, delta, 4, 2);
  CHECK(si.verdict == CheckVerdict::certified);
  CHECK(si.margin == 2);
  auto sp = check_splicable(hb, delta, 4, 2);
  CHECK(sp.verdict == CheckVerdict::certified);
}

TEST_CASE("gap set must contain the identity") {
  GroupModel g = GroupModel::lattice(1);
  CHECK_THROWS_AS(check_splicable(golden_mean(), FiniteSubset(g, {z(1)}), 4), Error);
}
