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

#include <algorithm>
#include <set>

namespace symdyn {

GroupModel GroupModel::lattice(int rank) {
  if (rank < 1 || rank > 8) fail(ErrorCode::invalid_argument, "lattice rank must be in [1,8]");
  return GroupModel(GroupKind::lattice, rank, 0);
}

GroupModel GroupModel::free_group(int rank) {
  if (rank < 1 || rank > 26) fail(ErrorCode::invalid_argument, "free rank must be in [1,26]");
  return GroupModel(GroupKind::free_group, rank, 0);
}

GroupModel GroupModel::cyclic(std::int64_t order) {
  if (order < 1) fail(ErrorCode::invalid_argument, "cyclic order must be positive");
  return GroupModel(GroupKind::cyclic, 1, order);
}

GroupModel GroupModel::parse(const std::string& decl) {
  auto colon = decl.find(':');
  if (colon == std::string::npos) fail(ErrorCode::parse, "group declaration needs kind:param, got '" + decl + "'");
  std::string kind = decl.substr(0, colon);
  std::int64_t param = 0;
  try {
    param = std::stoll(decl.substr(colon + 1));
  } catch (const std::exception&) {
    fail(ErrorCode::parse, "bad group parameter in '" + decl + "'");
  }
  if (kind == "lattice") return lattice(static_cast<int>(param));
  if (kind == "free") return free_group(static_cast<int>(param));
  if (kind == "cyclic") return cyclic(param);
  fail(ErrorCode::parse, "unknown group kind '" + kind + "'");
}

std::string GroupModel::decl() const {
  switch (kind_) {
    case GroupKind::lattice: return "lattice:" + std::to_string(rank_);
    case GroupKind::free_group: return "free:" + std::to_string(rank_);
    case GroupKind::cyclic: return "cyclic:" + std::to_string(order_);
  }
  return "?";
}

GroupElement GroupModel::identity() const {
  switch (kind_) {
    case GroupKind::lattice: return GroupElement{std::vector<std::int64_t>(rank_, 0)};
    case GroupKind::free_group: return GroupElement{{}};
    case GroupKind::cyclic: return GroupElement{{0}};
  }
  return GroupElement{};
}

bool GroupModel::is_identity(const GroupElement& g) const { return g == identity(); }

void GroupModel::check_element(const GroupElement& g) const {
  switch (kind_) {
    case GroupKind::lattice:
      if (g.word.size() != static_cast<std::size_t>(rank_))
        fail(ErrorCode::invalid_argument, "lattice element has wrong rank");
      return;
    case GroupKind::free_group:
      for (std::size_t i = 0; i < g.word.size(); ++i) {
        std::int64_t l = g.word[i];
        if (l == 0 || l > rank_ || l < -rank_) fail(ErrorCode::invalid_argument, "free letter out of range");
        if (i > 0 && g.word[i - 1] == -l) fail(ErrorCode::invalid_argument, "free word not reduced");
      }
      return;
    case GroupKind::cyclic:
      if (g.word.size() != 1 || g.word[0] < 0 || g.word[0] >= order_)
        fail(ErrorCode::invalid_argument, "cyclic residue out of range");
      return;
  }
}

GroupElement GroupModel::mul(const GroupElement& a, const GroupElement& b) const {
  switch (kind_) {
    case GroupKind::lattice: {
      GroupElement r = a;
      for (int i = 0; i < rank_; ++i) r.word[i] += b.word[i];
      return r;
    }
    case GroupKind::free_group: {
      GroupElement r = a;
      for (std::int64_t l : b.word) {
        if (!r.word.empty() && r.word.back() == -l)
          r.word.pop_back();
        else
          r.word.push_back(l);
      }
      return r;
    }
    case GroupKind::cyclic: {
      std::int64_t v = (a.word[0] + b.word[0]) % order_;
      return GroupElement{{v}};
    }
  }
  return GroupElement{};
}

GroupElement GroupModel::inverse(const GroupElement& g) const {
  switch (kind_) {
    case GroupKind::lattice: {
      GroupElement r = g;
      for (auto& c : r.word) c = -c;
      return r;
    }
    case GroupKind::free_group: {
      GroupElement r;
      r.word.reserve(g.word.size());
      for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) r.word.push_back(-*it);
      return r;
    }
    case GroupKind::cyclic: {
      std::int64_t v = (order_ - g.word[0]) % order_;
      return GroupElement{{v}};
    }
  }
  return GroupElement{};
}

namespace {

void lattice_ball_rec(int rank, std::int64_t radius, std::vector<std::int64_t>& cur,
                      std::vector<GroupElement>& out) {
  if (static_cast<int>(cur.size()) == rank) {
    out.push_back(GroupElement{cur});
    return;
  }
  for (std::int64_t c = -radius; c <= radius; ++c) {
    cur.push_back(c);
    lattice_ball_rec(rank, radius, cur, out);
    cur.pop_back();
  }
}

void free_ball_rec(int rank, int remaining, std::vector<std::int64_t>& cur,
                   std::vector<GroupElement>& out) {
  out.push_back(GroupElement{cur});
  if (remaining == 0) return;
  for (int i = 1; i <= rank; ++i) {
    for (std::int64_t l : {static_cast<std::int64_t>(i), static_cast<std::int64_t>(-i)}) {
      if (!cur.empty() && cur.back() == -l) continue;
      cur.push_back(l);
      free_ball_rec(rank, remaining - 1, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

FiniteSubset GroupModel::ball(int n) const {
  if (n < 0) fail(ErrorCode::invalid_argument, "ball index must be nonnegative");
  if (n == 0) return FiniteSubset::empty(*this);
  std::vector<GroupElement> elems;
  std::int64_t radius = n - 1;
  switch (kind_) {
    case GroupKind::lattice: {
      std::vector<std::int64_t> cur;
      lattice_ball_rec(rank_, radius, cur, elems);
      break;
    }
    case GroupKind::free_group: {
      std::vector<std::int64_t> cur;
      free_ball_rec(rank_, static_cast<int>(radius), cur, elems);
      break;
    }
    case GroupKind::cyclic: {
      std::set<std::int64_t> residues;
      for (std::int64_t k = -radius; k <= radius; ++k) residues.insert(((k % order_) + order_) % order_);
      for (std::int64_t v : residues) elems.push_back(GroupElement{{v}});
      break;
    }
  }
  return FiniteSubset(*this, std::move(elems));
}

std::string GroupModel::format(const GroupElement& g) const {
  switch (kind_) {
    case GroupKind::lattice: {
      if (rank_ == 1) return std::to_string(g.word[0]);
      std::string s = "(";
      for (int i = 0; i < rank_; ++i) {
        if (i) s += ",";
        s += std::to_string(g.word[i]);
      }
      return s + ")";
    }
    case GroupKind::free_group: {
      if (g.word.empty()) return "e";
      std::string s;
      for (std::int64_t l : g.word) {
        char c = static_cast<char>('a' + (l > 0 ? l : -l) - 1);
        s += l > 0 ? c : static_cast<char>(c - 'a' + 'A');
      }
      return s;
    }
    case GroupKind::cyclic: return std::to_string(g.word[0]);
  }
  return "?";
}

GroupElement GroupModel::parse_element(const std::string& text) const {
  if (text.empty()) fail(ErrorCode::parse, "empty group element");
  switch (kind_) {
    case GroupKind::lattice: {
      std::vector<std::int64_t> coords;
      std::string body = text;
      if (body.front() == '(') {
        if (body.back() != ')') fail(ErrorCode::parse, "unbalanced parens in '" + text + "'");
        body = body.substr(1, body.size() - 2);
      }
      std::size_t pos = 0;
      while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
          coords.push_back(std::stoll(tok));
        } catch (const std::exception&) {
          fail(ErrorCode::parse, "bad coordinate '" + tok + "' in '" + text + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      if (static_cast<int>(coords.size()) != rank_)
        fail(ErrorCode::parse, "element '" + text + "' has wrong rank for " + decl());
      return GroupElement{coords};
    }
    case GroupKind::free_group: {
      if (text == "e") return identity();
      GroupElement g;
      for (char c : text) {
        std::int64_t l;
        if (c >= 'a' && c <= 'z')
          l = c - 'a' + 1;
        else if (c >= 'A' && c <= 'Z')
          l = -(c - 'A' + 1);
        else
          fail(ErrorCode::parse, "bad free-group letter '" + std::string(1, c) + "'");
        g = mul(g, GroupElement{{l}});
      }
      check_element(g);
      return g;
    }
    case GroupKind::cyclic: {
      std::int64_t v = 0;
      try {
        v = std::stoll(text);
      } catch (const std::exception&) {
        fail(ErrorCode::parse, "bad cyclic residue '" + text + "'");
      }
      return GroupElement{{((v % order_) + order_) % order_}};
    }
  }
  return GroupElement{};
}

FiniteSubset::FiniteSubset(GroupModel model, std::vector<GroupElement> elems)
    : model_(model), elems_(std::move(elems)) {
  for (const auto& e : elems_) model_.check_element(e);
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FiniteSubset::contains(const GroupElement& g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

FiniteSubset FiniteSubset::unite(const FiniteSubset& other) const {
  if (model_ != other.model_) fail(ErrorCode::model_mismatch, "union over mixed group models");
  std::vector<GroupElement> all = elems_;
  all.insert(all.end(), other.elems_.begin(), other.elems_.end());
  return FiniteSubset(model_, std::move(all));
}

FiniteSubset FiniteSubset::inverse() const {
  std::vector<GroupElement> inv;
  inv.reserve(elems_.size());
  for (const auto& e : elems_) inv.push_back(model_.inverse(e));
  return FiniteSubset(model_, std::move(inv));
}

bool FiniteSubset::is_symmetric() const { return *this == inverse(); }

bool FiniteSubset::subset_of(const FiniteSubset& other) const {
  if (model_ != other.model_) fail(ErrorCode::model_mismatch, "subset test over mixed group models");
  for (const auto& e : elems_)
    if (!other.contains(e)) return false;
  return true;
}

std::string FiniteSubset::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += " ";
    s += model_.format(elems_[i]);
  }
  return s + "}";
}

FiniteSubset set_product(const FiniteSubset& f1, const FiniteSubset& f2) {
  if (f1.model() != f2.model()) fail(ErrorCode::model_mismatch, "set product over mixed group models");
  std::vector<GroupElement> prod;
  prod.reserve(f1.size() * f2.size());
  for (const auto& a : f1.elements())
    for (const auto& b : f2.elements()) prod.push_back(f1.model().mul(a, b));
  return FiniteSubset(f1.model(), std::move(prod));
}

bool is_separated(const FiniteSubset& f, const FiniteSubset& v) {
  if (f.model() != v.model()) fail(ErrorCode::model_mismatch, "separation test over mixed group models");
  if (f.empty_set()) fail(ErrorCode::invalid_argument, "separation test needs nonempty F");
  const auto& model = f.model();
  std::vector<std::vector<GroupElement>> translates;
  translates.reserve(v.size());
  for (const auto& s : v.elements()) {
    std::vector<GroupElement> fs;
    fs.reserve(f.size());
    for (const auto& g : f.elements()) fs.push_back(model.mul(g, s));
    std::sort(fs.begin(), fs.end());
    translates.push_back(std::move(fs));
  }
  for (std::size_t i = 0; i < translates.size(); ++i)
    for (std::size_t j = i + 1; j < translates.size(); ++j) {
      // sorted lists: linear-time disjointness
      const auto& a = translates[i];
      const auto& b = translates[j];
      std::size_t x = 0, y = 0;
      while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) return false;
        if (a[x] < b[y])
          ++x;
        else
          ++y;
      }
    }
  return true;
}

}  // namespace symdyn
