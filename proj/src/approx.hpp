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

#ifndef SYMDYN_APPROX_HPP
#define SYMDYN_APPROX_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "group.hpp"
#include "rational.hpp"

namespace symdyn {

using Permutation = std::vector<std::uint32_t>;

// Normalized Hamming distance (1/d)|{a : s(a) != t(a)}|; bi-invariant.
Rational hamming_distance(const Permutation& s, const Permutation& t);

Permutation compose(const Permutation& s, const Permutation& t);  // s after t
Permutation inverse_permutation(const Permutation& s);

// Near-action of a group on [d]: explicit permutation table over a
// declared support ball. Out-of-support queries fail loudly.
class SoficApproximation {
 public:
  // sigma(k) = +k mod d on Z; exact homomorphism.
  static SoficApproximation cyclic(std::int64_t d, int support_radius = 8);
  // sigma(v) = translation on (Z/dZ)^r; table over the radius ball.
  static SoficApproximation torus(std::int64_t d, int rank, int support_radius = 4);
  // Seeded uniform generator permutations extended multiplicatively over
  // reduced words of the radius ball; zero defect by construction.
  static SoficApproximation word_extension_random(int rank, std::int64_t d, std::uint64_t seed,
                                                  int support_radius = 4);

  const GroupModel& group() const { return group_; }
  std::int64_t degree() const { return d_; }  // |[d]|
  const std::string& tag() const { return tag_; }
  const FiniteSubset& support() const { return support_; }

  bool supports(const GroupElement& g) const;
  const Permutation& permutation(const GroupElement& g) const;

  // serialization: one line per supported element
  std::string dump() const;
  static SoficApproximation parse(const std::string& text);

 private:
  SoficApproximation(GroupModel g, std::int64_t d, std::string tag)
      : group_(g), d_(d), tag_(std::move(tag)) {}

  GroupModel group_;
  std::int64_t d_;
  std::string tag_;
  FiniteSubset support_;
  std::map<GroupElement, Permutation> table_;
};

// Ordered list with strictly increasing degree.
class ApproximationSequence {
 public:
  void push(SoficApproximation approx);
  const std::vector<SoficApproximation>& items() const { return items_; }

 private:
  std::vector<SoficApproximation> items_;
};

struct QualityReport {
  struct DefectEntry {
    GroupElement s, t;
    Rational defect;  // eta(sigma(st), sigma(s)sigma(t))
  };
  struct SeparationEntry {
    GroupElement s, t;
    Rational separation;  // eta(sigma(s), sigma(t))
  };
  std::vector<DefectEntry> defects;          // ordered pairs
  std::vector<SeparationEntry> separations;  // unordered distinct pairs
  Rational max_defect{0, 1};
  Rational min_separation{1, 1};
};

// Evaluates the defining near-action conditions on a finite test set;
// every product st must lie inside the approximation's support.
QualityReport quality(const SoficApproximation& approx, const FiniteSubset& test_set);

}  // namespace symdyn

#endif  // SYMDYN_APPROX_HPP
