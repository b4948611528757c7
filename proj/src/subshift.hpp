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

#ifndef SYMDYN_SUBSHIFT_HPP
#define SYMDYN_SUBSHIFT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "config.hpp"
#include "group.hpp"

namespace symdyn {

// Finite pattern: an assignment on a finite support, values aligned
// with the support's sorted (row-major) element order.
struct Pattern {
  FiniteSubset support;
  std::vector<std::uint8_t> values;

  Pattern(FiniteSubset s, std::vector<std::uint8_t> v) : support(std::move(s)), values(std::move(v)) {
    if (support.size() != values.size())
      fail(ErrorCode::invalid_argument, "pattern assignment must be total on its support");
  }

  std::string str(const Alphabet& a) const {
    std::string s;
    for (auto v : values) s += a.symbol(v);
    return s;
  }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.support == b.support && a.values == b.values;
  }
  friend bool operator<(const Pattern& a, const Pattern& b) {
    if (!(a.support == b.support)) return a.support.elements() < b.support.elements();
    return a.values < b.values;
  }
};

class TransferGraph;

// Subshift of finite type X = { x in A^G : (g x)|_Omega admissible for all g },
// given by a memory set and its admissible window patterns.
class Subshift {
 public:
  Subshift(Alphabet alphabet, GroupModel group, FiniteSubset memory,
           std::vector<Pattern> admissible);

  const Alphabet& alphabet() const { return alphabet_; }
  const GroupModel& group() const { return group_; }
  const FiniteSubset& memory() const { return memory_; }
  const std::vector<Pattern>& admissible() const { return admissible_; }
  bool had_duplicate_admissible() const { return had_duplicates_; }

  int rank() const { return group_.rank(); }

  // Memory offsets normalized to start at the origin (per axis), sorted.
  const std::vector<std::vector<std::int64_t>>& memory_offsets() const { return offsets_; }
  // Per-axis extent of the normalized memory bounding box.
  const std::vector<std::int64_t>& memory_extent() const { return extent_; }

  // Window test for values listed in memory_offsets() order.
  bool window_admissible(const std::uint8_t* values) const;

  // Exact membership test for finitely described points.
  bool contains(const Configuration& x) const;

  // Lazily built transfer graph (rank 1 only).
  const TransferGraph& transfer() const;

  std::string str() const;

  friend bool operator==(const Subshift& a, const Subshift& b) {
    return a.alphabet_ == b.alphabet_ && a.group_ == b.group_ && a.memory_ == b.memory_ &&
           a.admissible_ == b.admissible_;
  }

 private:
  Alphabet alphabet_;
  GroupModel group_;
  FiniteSubset memory_;
  std::vector<Pattern> admissible_;
  bool had_duplicates_ = false;

  std::vector<std::vector<std::int64_t>> offsets_;
  std::vector<std::int64_t> extent_;
  std::vector<char> window_lookup_;  // indexed by base-|A| encoding of the window tuple
  mutable std::shared_ptr<const TransferGraph> transfer_;
};

// Result of a pattern enumeration; for rank >= 2 the patterns are only
// guaranteed locally admissible at the stated margin.
struct PatternSet {
  std::vector<Pattern> patterns;
  bool exact = true;
  int margin = 0;
};

// All patterns on a box window that extend to a point of X. Exact for
// rank 1 via the transfer graph; locally admissible with margin for rank 2.
PatternSet enumerate_patterns(const Subshift& x, const FiniteSubset& window,
                              std::size_t budget = 1u << 22, int margin = 2);

// All points fixed by the index-d lattice (cyclic words of length d;
// d x d torus tilings for rank 2), every translate admissible.
std::vector<Configuration> periodic_points(const Subshift& x, std::int64_t d,
                                           std::size_t budget = 1u << 22);

// Count of the above without materializing (rank 1: closed-path DP).
std::int64_t count_periodic_points(const Subshift& x, std::int64_t d);

// An eventually periodic point of X reading `w` on [0, |w|); fails if w
// is not globally admissible (rank 1 only).
Configuration configuration_through_word(const Subshift& x, const std::vector<std::uint8_t>& w);

// Builders for the stock examples.
Subshift full_shift(const Alphabet& a, const GroupModel& g);
Subshift golden_mean();
Subshift weiss_sft();
// Forbids x(g) = x(gs) = 1 for s in f; requires 1_G not in f.
Subshift hard_ball(const GroupModel& g, const FiniteSubset& f);
// Single fixed point 0^inf over {0,1} (memory {1_G}, only "0" admissible).
Subshift zeros_sft();

}  // namespace symdyn

#endif  // SYMDYN_SUBSHIFT_HPP
