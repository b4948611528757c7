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

#include "approx.hpp"

#include <random>
#include <sstream>

namespace symdyn {

Rational hamming_distance(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) fail(ErrorCode::invalid_argument, "permutation size mismatch");
  std::int64_t moved = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != t[i]) ++moved;
  return Rational(moved, static_cast<std::int64_t>(s.size()));
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) fail(ErrorCode::invalid_argument, "permutation size mismatch");
  Permutation out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[t[i]];
  return out;
}

Permutation inverse_permutation(const Permutation& s) {
  Permutation out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[s[i]] = static_cast<std::uint32_t>(i);
  return out;
}

namespace {

void check_permutation(const Permutation& p, std::int64_t d) {
  if (static_cast<std::int64_t>(p.size()) != d)
    fail(ErrorCode::invalid_argument, "permutation has wrong degree");
  std::vector<char> seen(p.size(), 0);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) fail(ErrorCode::invalid_argument, "table entry is not a bijection");
    seen[v] = 1;
  }
}

}  // namespace

SoficApproximation SoficApproximation::cyclic(std::int64_t d, int support_radius) {
  if (d < 1) fail(ErrorCode::invalid_argument, "degree must be positive");
  GroupModel g = GroupModel::lattice(1);
  SoficApproximation a(g, d, "cyclic");
  a.support_ = g.ball(support_radius + 1);
  for (const auto& e : a.support_.elements()) {
    std::int64_t k = e.word[0];
    Permutation p(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i)
      p[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>((((i + k) % d) + d) % d);
    a.table_.emplace(e, std::move(p));
  }
  return a;
}

SoficApproximation SoficApproximation::torus(std::int64_t d, int rank, int support_radius) {
  if (d < 1) fail(ErrorCode::invalid_argument, "degree must be positive");
  GroupModel g = GroupModel::lattice(rank);
  std::int64_t total = 1;
  for (int i = 0; i < rank; ++i) {
    total *= d;
    if (total > (std::int64_t{1} << 32)) fail(ErrorCode::budget, "torus degree too large");
  }
  SoficApproximation a(g, total, "torus");
  a.support_ = g.ball(support_radius + 1);
  for (const auto& e : a.support_.elements()) {
    Permutation p(static_cast<std::size_t>(total));
    // row-major index over (Z/d)^rank
    for (std::int64_t idx = 0; idx < total; ++idx) {
      std::int64_t rem = idx, out = 0;
      std::int64_t scale = total;
      for (int i = 0; i < rank; ++i) {
        scale /= d;
        std::int64_t coord = rem / scale;
        rem %= scale;
        std::int64_t moved = (((coord + e.word[static_cast<std::size_t>(i)]) % d) + d) % d;
        out = out * d + moved;
      }
      p[static_cast<std::size_t>(idx)] = static_cast<std::uint32_t>(out);
    }
    a.table_.emplace(e, std::move(p));
  }
  return a;
}

SoficApproximation SoficApproximation::word_extension_random(int rank, std::int64_t d,
                                                             std::uint64_t seed,
                                                             int support_radius) {
  if (d < 2) fail(ErrorCode::invalid_argument, "degree must be at least 2");
  GroupModel g = GroupModel::free_group(rank);
  SoficApproximation a(g, d, "word-extension-random(seed=" + std::to_string(seed) + ")");
  a.support_ = g.ball(support_radius + 1);

  std::mt19937_64 rng(seed);
  std::vector<Permutation> gens;
  std::vector<Permutation> gens_inv;
  for (int i = 0; i < rank; ++i) {
    Permutation p(static_cast<std::size_t>(d));
    for (std::int64_t j = 0; j < d; ++j) p[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(j);
    // Fisher-Yates with the seeded engine
    for (std::size_t j = p.size(); j > 1; --j) {
      std::uniform_int_distribution<std::size_t> dist(0, j - 1);
      std::swap(p[j - 1], p[dist(rng)]);
    }
    gens_inv.push_back(inverse_permutation(p));
    gens.push_back(std::move(p));
  }

  for (const auto& e : a.support_.elements()) {
    Permutation p(static_cast<std::size_t>(d));
    for (std::int64_t j = 0; j < d; ++j) p[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(j);
    // sigma(s1 s2 ... sl) = sigma(s1) o sigma(s2) o ... o sigma(sl)
    for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) {
      const Permutation& step = *it > 0 ? gens[static_cast<std::size_t>(*it - 1)]
                                        : gens_inv[static_cast<std::size_t>(-*it - 1)];
      p = compose(step, p);
    }
    a.table_.emplace(e, std::move(p));
  }
  return a;
}

bool SoficApproximation::supports(const GroupElement& g) const { return table_.count(g) > 0; }

const Permutation& SoficApproximation::permutation(const GroupElement& g) const {
  auto it = table_.find(g);
  if (it == table_.end())
    fail(ErrorCode::support, "element " + group_.format(g) + " outside the approximation support");
  return it->second;
}

std::string SoficApproximation::dump() const {
  std::ostringstream out;
  out << "group = " << group_.decl() << "\n";
  out << "d = " << d_ << "\n";
  out << "tag = " << tag_ << "\n";
  for (const auto& [e, p] : table_) {
    out << group_.format(e);
    for (auto v : p) out << " " << v;
    out << "\n";
  }
  return out.str();
}

SoficApproximation SoficApproximation::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  GroupModel g = GroupModel::lattice(1);
  std::int64_t d = -1;
  std::string tag;
  bool have_group = false;
  std::map<GroupElement, Permutation> table;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find(" = ");
    if (eq != std::string::npos) {
      std::string k = line.substr(0, eq);
      std::string v = line.substr(eq + 3);
      auto trim = [](std::string& s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
      };
      trim(k);
      trim(v);
      if (k == "group") {
        g = GroupModel::parse(v);
        have_group = true;
      } else if (k == "d") {
        d = std::stoll(v);
      } else if (k == "tag") {
        tag = v;
      } else {
        fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": unknown key '" + k + "'");
      }
      continue;
    }
    if (!have_group || d < 1)
      fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": table before group/d header");
    std::istringstream ls(line);
    std::string elem;
    ls >> elem;
    Permutation p;
    std::int64_t v;
    while (ls >> v) p.push_back(static_cast<std::uint32_t>(v));
    check_permutation(p, d);
    table.emplace(g.parse_element(elem), std::move(p));
  }
  if (!have_group || d < 1) fail(ErrorCode::parse, "approximation file missing group/d header");
  SoficApproximation a(g, d, tag.empty() ? "parsed" : tag);
  std::vector<GroupElement> elems;
  for (const auto& [e, p] : table) elems.push_back(e);
  a.support_ = FiniteSubset(g, elems);
  if (!a.support_.contains(g.identity()))
    fail(ErrorCode::parse, "approximation support must contain the identity");
  if (!a.support_.is_symmetric())
    fail(ErrorCode::parse, "approximation support must be closed under inverses");
  a.table_ = std::move(table);
  return a;
}

void ApproximationSequence::push(SoficApproximation approx) {
  if (!items_.empty() && approx.degree() <= items_.back().degree())
    fail(ErrorCode::invalid_argument, "approximation degrees must strictly increase");
  items_.push_back(std::move(approx));
}

QualityReport quality(const SoficApproximation& approx, const FiniteSubset& test_set) {
  if (test_set.model() != approx.group())
    fail(ErrorCode::model_mismatch, "test set over wrong group");
  QualityReport report;
  const auto& model = approx.group();
  const auto& elems = test_set.elements();
  bool first_sep = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      GroupElement st = model.mul(elems[i], elems[j]);
      const Permutation& ps = approx.permutation(elems[i]);
      const Permutation& pt = approx.permutation(elems[j]);
      const Permutation& pst = approx.permutation(st);
      Rational defect = hamming_distance(pst, compose(ps, pt));
      report.defects.push_back({elems[i], elems[j], defect});
      if (report.max_defect < defect) report.max_defect = defect;
      if (j > i) {
        Rational sep = hamming_distance(ps, pt);
        report.separations.push_back({elems[i], elems[j], sep});
        if (first_sep || sep < report.min_separation) {
          report.min_separation = sep;
          first_sep = false;
        }
      }
    }
  }
  return report;
}

}  // namespace symdyn
