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

#ifndef SYMDYN_CONFIG_HPP
#define SYMDYN_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dyadic.hpp"
#include "group.hpp"

namespace symdyn {

// Finite ordered alphabet; symbols are single characters.
class Alphabet {
 public:
  Alphabet() : symbols_("0") {}
  explicit Alphabet(std::string symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  char symbol(int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  int index(char c) const;  // fails on unknown symbol
  const std::string& symbols() const { return symbols_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

 private:
  std::string symbols_;
};

// A point of A^G with a finite description, over an integer lattice.
//
// Rank 1 stores two periodic tails and an explicit middle segment:
//   value(p) = left[(p - mid_lo) mod L]        for p <  mid_lo
//   value(p) = mid[p - mid_lo]                 for mid_lo <= p < mid_hi
//   value(p) = right[(p - mid_hi) mod R]       for p >= mid_hi
// A fully periodic point has equal tails, empty middle and anchor 0.
// Descriptions are normalized (primitive tail words, minimal middle),
// so equality of descriptions is equality of points.
//
// Rank >= 2 stores a torus background (period vector, row-major data)
// plus a finite override map whose entries all differ from the
// background, making the description canonical as well.
class Configuration {
 public:
  // Fully periodic point of A^Z, word anchored at the origin.
  static Configuration periodic_z(const Alphabet& a, std::vector<std::uint8_t> word);
  // Two periodic tails with an explicit middle segment starting at mid_lo.
  static Configuration bi_tail(const Alphabet& a, std::vector<std::uint8_t> left,
                               std::int64_t mid_lo, std::vector<std::uint8_t> mid,
                               std::vector<std::uint8_t> right);
  // Periodic point of A^{Z^r} (r >= 2): per-axis periods, row-major data.
  static Configuration periodic_lattice(const Alphabet& a, std::vector<std::int64_t> periods,
                                        std::vector<std::uint8_t> data);

  // Same point with finitely many cells replaced.
  Configuration with_overrides(const std::vector<std::pair<GroupElement, std::uint8_t>>& cells) const;

  const Alphabet& alphabet() const { return alphabet_; }
  const GroupModel& group() const { return model_; }
  int rank() const { return model_.rank(); }

  std::uint8_t value_z(std::int64_t p) const;          // rank 1
  std::uint8_t value(const GroupElement& g) const;     // any rank
  char symbol_z(std::int64_t p) const { return alphabet_.symbol(value_z(p)); }

  bool is_periodic() const;
  // Period data for fully periodic points (rank 1: primitive word length;
  // rank r: the period vector).
  std::vector<std::int64_t> periods() const;

  std::string str() const;
  std::size_t hash() const;

  friend bool operator==(const Configuration& a, const Configuration& b);
  friend bool operator!=(const Configuration& a, const Configuration& b) { return !(a == b); }

  // rank-1 internals used by the shift-space machinery
  const std::vector<std::uint8_t>& left_word() const { return left_; }
  const std::vector<std::uint8_t>& right_word() const { return right_; }
  const std::vector<std::uint8_t>& mid_segment() const { return mid_; }
  std::int64_t mid_lo() const { return mid_lo_; }
  std::int64_t mid_hi() const { return mid_lo_ + static_cast<std::int64_t>(mid_.size()); }

  // rank >= 2 internals
  const std::vector<std::int64_t>& torus_periods() const { return periods_; }
  const std::vector<std::uint8_t>& torus_data() const { return base_; }
  const std::map<std::vector<std::int64_t>, std::uint8_t>& overrides() const { return overrides_; }
  std::uint8_t background_at(const std::vector<std::int64_t>& coords) const {
    return background_value(coords);
  }

 private:
  Configuration(const Alphabet& a, GroupModel model) : alphabet_(a), model_(model) {}
  void normalize_z();
  void normalize_lattice();
  std::uint8_t background_value(const std::vector<std::int64_t>& coords) const;

  Alphabet alphabet_;
  GroupModel model_;

  // rank 1
  std::vector<std::uint8_t> left_, mid_, right_;
  std::int64_t mid_lo_ = 0;

  // rank >= 2
  std::vector<std::int64_t> periods_;
  std::vector<std::uint8_t> base_;
  std::map<std::vector<std::int64_t>, std::uint8_t> overrides_;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const { return c.hash(); }
};

// Shift action: (g x)(h) = x(g^-1 h).
Configuration shift_apply(const GroupElement& g, const Configuration& x);

// rho(x, y) = 2^-n with n = sup{ n : x and y agree on Omega_n }.
Dyadic config_distance(const Configuration& x, const Configuration& y);

// rho(g x, g y), computed without materializing the shifts.
Dyadic config_distance_shifted(const Configuration& x, const Configuration& y, const GroupElement& g);

// rho(x, s y) for rank-1 integer shift s: compares x(p) against y(p - s).
Dyadic config_distance_offset_z(const Configuration& x, const Configuration& y, std::int64_t s);

// rho(x, s y) for any lattice rank.
Dyadic config_distance_offset(const Configuration& x, const Configuration& y,
                              const GroupElement& s);

// rho_A(x, y) = max over g in A of rho(g x, g y).
Dyadic orbit_distance(const FiniteSubset& a, const Configuration& x, const Configuration& y);

}  // namespace symdyn

#endif  // SYMDYN_CONFIG_HPP
