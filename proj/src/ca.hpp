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

#ifndef SYMDYN_CA_HPP
#define SYMDYN_CA_HPP

#include <optional>
#include <string>
#include <vector>

#include "subshift.hpp"

namespace symdyn {

// Local rule mu : A^S -> A. The table is indexed by the lexicographic
// order of A^S with the first (sorted) memory coordinate most significant.
struct LocalRule {
  Alphabet alphabet;
  GroupModel group;
  FiniteSubset memory;  // S
  std::vector<std::uint8_t> table;

  LocalRule(Alphabet a, GroupModel g, FiniteSubset s, std::vector<std::uint8_t> t);

  std::size_t table_size() const { return table.size(); }
  std::uint8_t apply_window(const std::uint8_t* values) const;

  friend bool operator==(const LocalRule& a, const LocalRule& b) {
    return a.alphabet == b.alphabet && a.group == b.group && a.memory == b.memory &&
           a.table == b.table;
  }
};

// True iff the induced map sends X into X. Exact for rank 1 (transfer
// graph); conservative margin check for rank 2.
bool preserves_subshift(const LocalRule& rule, const Subshift& x, int margin = 2);

// G-equivariant self-map of a subshift induced by a local rule; the
// invariance of the domain is checked at construction.
class Endomorphism {
 public:
  Endomorphism(LocalRule rule, Subshift domain);

  const LocalRule& rule() const { return rule_; }
  const Subshift& domain() const { return domain_; }

 private:
  LocalRule rule_;
  Subshift domain_;
};

// Pointwise application; fails with a domain error when x is not in the
// domain subshift.
Configuration apply(const Endomorphism& f, const Configuration& x);

struct InjectivityResult {
  bool injective = false;
  // two distinct points with equal image, re-verified by direct application
  std::optional<Configuration> witness_x;
  std::optional<Configuration> witness_y;
};

struct SurjectivityResult {
  bool surjective = false;
  // globally admissible word with no preimage, re-verified by exhaustive search
  std::optional<Pattern> orphan;
};

// Exact decisions for rank-1 SFT domains.
InjectivityResult decide_injective(const Endomorphism& f);
SurjectivityResult decide_surjective(const Endomorphism& f);

struct SweepEntry {
  std::uint64_t rule_id = 0;
  bool preserving = false;
  bool injective = false;
  bool surjective = false;
  std::string orphan;
};

struct SweepReport {
  std::uint64_t total_rules = 0;
  std::uint64_t preserving = 0;
  std::uint64_t injective = 0;
  std::uint64_t injective_not_surjective = 0;
  std::vector<SweepEntry> entries;  // one per rule, rule_id order
};

// Enumerates every local rule on S, filters the X-preserving ones and
// decides injectivity/surjectivity for each. The sweep parallelizes
// across rules; `threads` caps the workers.
SweepReport surjunctivity_sweep(const Subshift& x, const FiniteSubset& s,
                                std::uint64_t rule_budget = 1u << 21, int threads = 1);

// Rule table for a given index in the sweep order.
LocalRule rule_from_id(const Alphabet& a, const GroupModel& g, const FiniteSubset& s,
                       std::uint64_t id);

}  // namespace symdyn

#endif  // SYMDYN_CA_HPP
