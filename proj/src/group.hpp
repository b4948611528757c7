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

#ifndef SYMDYN_GROUP_HPP
#define SYMDYN_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace symdyn {

enum class GroupKind { lattice, free_group, cyclic };

// Group element in canonical normal form. The payload depends on the
// model kind:
//   lattice rank r : r coordinates
//   free rank k    : reduced word, letters +i / -i for generator i (1-based)
//   cyclic order n : single residue in [0, n)
// Payload equality is equality in the group.
struct GroupElement {
  std::vector<std::int64_t> word;

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.word == b.word; }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  }
};

class FiniteSubset;

// Finitely generated group with exact element arithmetic and a fixed
// exhausting ball sequence Omega_n. Value type; cheap to copy.
class GroupModel {
 public:
  static GroupModel lattice(int rank);
  static GroupModel free_group(int rank);
  static GroupModel cyclic(std::int64_t order);
  // "lattice:2", "free:2", "cyclic:12"
  static GroupModel parse(const std::string& decl);

  GroupKind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::int64_t order() const { return order_; }

  GroupElement identity() const;
  bool is_identity(const GroupElement& g) const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& g) const;

  // Ball sequence: Omega_0 = {}, Omega_1 = {1_G}; for n >= 1 the
  // lattice ball is {|g|_inf <= n-1}, the free-group ball is reduced
  // words of length <= n-1, the cyclic ball is {-(n-1)..n-1} mod order.
  FiniteSubset ball(int n) const;

  std::string format(const GroupElement& g) const;
  GroupElement parse_element(const std::string& text) const;
  std::string decl() const;

  void check_element(const GroupElement& g) const;

  friend bool operator==(const GroupModel& a, const GroupModel& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.order_ == b.order_;
  }
  friend bool operator!=(const GroupModel& a, const GroupModel& b) { return !(a == b); }

 private:
  GroupModel(GroupKind k, int rank, std::int64_t order) : kind_(k), rank_(rank), order_(order) {}

  GroupKind kind_ = GroupKind::lattice;
  int rank_ = 1;
  std::int64_t order_ = 0;  // cyclic only
};

// Deduplicated, order-normalized set of group elements. Sorted by
// normal form so hashes and file dumps are deterministic.
class FiniteSubset {
 public:
  FiniteSubset() : model_(GroupModel::lattice(1)) {}
  FiniteSubset(GroupModel model, std::vector<GroupElement> elems);
  static FiniteSubset empty(GroupModel model) { return FiniteSubset(model, {}); }

  const GroupModel& model() const { return model_; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty_set() const { return elems_.empty(); }
  bool contains(const GroupElement& g) const;

  FiniteSubset unite(const FiniteSubset& other) const;
  FiniteSubset inverse() const;
  bool is_symmetric() const;
  bool subset_of(const FiniteSubset& other) const;

  std::string str() const;

  friend bool operator==(const FiniteSubset& a, const FiniteSubset& b) {
    return a.model_ == b.model_ && a.elems_ == b.elems_;
  }

 private:
  GroupModel model_;
  std::vector<GroupElement> elems_;
};

// {f1*f2 : f1 in F1, f2 in F2}; throws model_mismatch on mixed models.
FiniteSubset set_product(const FiniteSubset& f1, const FiniteSubset& f2);

// True iff Fs and Ft are disjoint for all distinct s, t in V.
bool is_separated(const FiniteSubset& f, const FiniteSubset& v);

}  // namespace symdyn

#endif  // SYMDYN_GROUP_HPP
