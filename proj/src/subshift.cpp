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

#include <algorithm>
#include <set>

#include "grid.hpp"
#include "transfer.hpp"

namespace symdyn {

Subshift::Subshift(Alphabet alphabet, GroupModel group, FiniteSubset memory,
                   std::vector<Pattern> admissible)
    : alphabet_(std::move(alphabet)),
      group_(group),
      memory_(std::move(memory)),
      admissible_(std::move(admissible)) {
  if (group_.kind() != GroupKind::lattice)
    fail(ErrorCode::unsupported, "subshifts are supported over integer lattices only");
  if (memory_.empty_set()) fail(ErrorCode::invalid_argument, "memory set must be nonempty");
  if (memory_.model() != group_) fail(ErrorCode::model_mismatch, "memory set over wrong group");

  for (const auto& p : admissible_) {
    if (!(p.support == memory_))
      fail(ErrorCode::invalid_argument, "admissible pattern support must equal the memory set");
    for (auto v : p.values)
      if (v >= alphabet_.size()) fail(ErrorCode::invalid_argument, "pattern symbol out of range");
  }
  std::sort(admissible_.begin(), admissible_.end());
  auto last = std::unique(admissible_.begin(), admissible_.end());
  had_duplicates_ = last != admissible_.end();
  admissible_.erase(last, admissible_.end());

  // normalize memory offsets to start at the origin
  int r = rank();
  std::vector<std::int64_t> mins(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    std::int64_t mn = memory_.elements()[0].word[static_cast<std::size_t>(i)];
    for (const auto& e : memory_.elements()) mn = std::min(mn, e.word[static_cast<std::size_t>(i)]);
    mins[static_cast<std::size_t>(i)] = mn;
  }
  extent_.assign(static_cast<std::size_t>(r), 1);
  for (const auto& e : memory_.elements()) {
    std::vector<std::int64_t> off(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      off[static_cast<std::size_t>(i)] = e.word[static_cast<std::size_t>(i)] - mins[static_cast<std::size_t>(i)];
      extent_[static_cast<std::size_t>(i)] =
          std::max(extent_[static_cast<std::size_t>(i)], off[static_cast<std::size_t>(i)] + 1);
    }
    offsets_.push_back(std::move(off));
  }

  // dense membership lookup over the window tuples
  std::size_t combos = 1;
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    if (combos > (std::size_t{1} << 24))
      fail(ErrorCode::budget, "memory set too large for the window table");
    combos *= static_cast<std::size_t>(alphabet_.size());
  }
  window_lookup_.assign(combos, 0);
  for (const auto& p : admissible_) {
    std::size_t code = 0;
    for (auto v : p.values) code = code * static_cast<std::size_t>(alphabet_.size()) + v;
    window_lookup_[code] = 1;
  }
}

bool Subshift::window_admissible(const std::uint8_t* values) const {
  std::size_t code = 0;
  for (std::size_t i = 0; i < offsets_.size(); ++i)
    code = code * static_cast<std::size_t>(alphabet_.size()) + values[i];
  return window_lookup_[code] != 0;
}

const TransferGraph& Subshift::transfer() const {
  if (!transfer_) transfer_ = std::make_shared<const TransferGraph>(*this);
  return *transfer_;
}

bool Subshift::contains(const Configuration& x) const {
  if (x.alphabet() != alphabet_ || x.group() != group_)
    fail(ErrorCode::model_mismatch, "configuration over wrong alphabet or group");
  std::vector<std::uint8_t> tuple(offsets_.size());
  if (rank() == 1) {
    std::int64_t span = extent_[0];
    std::int64_t left = static_cast<std::int64_t>(x.left_word().size());
    std::int64_t right = static_cast<std::int64_t>(x.right_word().size());
    std::int64_t lo = x.mid_lo() - span - left - 1;
    std::int64_t hi = x.mid_hi() + right + 1;
    for (std::int64_t u = lo; u < hi; ++u) {
      for (std::size_t i = 0; i < offsets_.size(); ++i)
        tuple[i] = x.value_z(u + offsets_[i][0]);
      if (!window_admissible(tuple.data())) return false;
    }
    return true;
  }
  // rank >= 2: all torus phases plus every window meeting an override
  std::size_t rk = static_cast<std::size_t>(rank());
  std::vector<std::int64_t> lo(rk), hi(rk);
  for (std::size_t i = 0; i < rk; ++i) {
    lo[i] = 0;
    hi[i] = x.torus_periods()[i];
  }
  for (const auto& [k, v] : x.overrides()) {
    for (std::size_t i = 0; i < rk; ++i) {
      lo[i] = std::min(lo[i], k[i] - extent_[i]);
      hi[i] = std::max(hi[i], k[i] + 1);
    }
  }
  std::vector<std::int64_t> u(lo);
  std::vector<std::int64_t> pos(rk);
  while (true) {
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
      for (std::size_t j = 0; j < rk; ++j) pos[j] = u[j] + offsets_[i][j];
      tuple[i] = x.value(GroupElement{pos});
    }
    if (!window_admissible(tuple.data())) return false;
    std::size_t axis = rk;
    bool done = true;
    while (axis > 0) {
      --axis;
      if (++u[axis] < hi[axis]) {
        done = false;
        break;
      }
      u[axis] = lo[axis];
    }
    if (done) return true;
  }
}

std::string Subshift::str() const {
  std::string s = "subshift(A=" + alphabet_.symbols() + ",G=" + group_.decl() +
                  ",memory=" + memory_.str() + ",patterns=" + std::to_string(admissible_.size()) + ")";
  return s;
}

namespace {

FiniteSubset box_window_check(const Subshift& x, const FiniteSubset& window,
                              std::vector<std::int64_t>& dims, std::vector<std::int64_t>& origin) {
  if (window.empty_set()) fail(ErrorCode::invalid_argument, "window must be nonempty");
  if (window.model() != x.group()) fail(ErrorCode::model_mismatch, "window over wrong group");
  std::size_t rk = static_cast<std::size_t>(x.rank());
  std::vector<std::int64_t> mins(rk), maxs(rk);
  for (std::size_t i = 0; i < rk; ++i) {
    mins[i] = maxs[i] = window.elements()[0].word[i];
    for (const auto& e : window.elements()) {
      mins[i] = std::min(mins[i], e.word[i]);
      maxs[i] = std::max(maxs[i], e.word[i]);
    }
  }
  std::int64_t cells = 1;
  for (std::size_t i = 0; i < rk; ++i) cells *= maxs[i] - mins[i] + 1;
  if (cells != static_cast<std::int64_t>(window.size()))
    fail(ErrorCode::unsupported, "window must be a full box");
  dims.resize(rk);
  origin = mins;
  for (std::size_t i = 0; i < rk; ++i) dims[i] = maxs[i] - mins[i] + 1;
  return window;
}

}  // namespace

PatternSet enumerate_patterns(const Subshift& x, const FiniteSubset& window, std::size_t budget,
                              int margin) {
  std::vector<std::int64_t> dims, origin;
  box_window_check(x, window, dims, origin);
  PatternSet out;
  if (x.rank() == 1) {
    const auto& graph = x.transfer();
    graph.enumerate_words(static_cast<std::size_t>(dims[0]), budget,
                          [&](const std::uint8_t* w, std::size_t len) {
                            out.patterns.emplace_back(
                                window, std::vector<std::uint8_t>(w, w + len));
                          });
    out.exact = true;
    out.margin = 0;
    return out;
  }
  if (x.rank() != 2) fail(ErrorCode::unsupported, "pattern enumeration supports rank 1 and 2");
  grid::enumerate_box_with_margin(x, dims, margin, budget, [&](const std::vector<std::uint8_t>& cells) {
    out.patterns.emplace_back(window, cells);
  });
  out.exact = false;
  out.margin = margin;
  return out;
}

std::vector<Configuration> periodic_points(const Subshift& x, std::int64_t d, std::size_t budget) {
  if (d < 1) fail(ErrorCode::invalid_argument, "period must be positive");
  std::vector<Configuration> out;
  if (x.rank() == 1) {
    const auto& graph = x.transfer();
    graph.enumerate_cyclic(d, budget, [&](const std::uint8_t* w, std::size_t len) {
      out.push_back(Configuration::periodic_z(x.alphabet(), std::vector<std::uint8_t>(w, w + len)));
    });
    return out;
  }
  if (x.rank() != 2) fail(ErrorCode::unsupported, "periodic points support rank 1 and 2");
  grid::enumerate_torus(x, d, budget, [&](const std::vector<std::uint8_t>& cells) {
    out.push_back(Configuration::periodic_lattice(x.alphabet(), {d, d}, cells));
  });
  return out;
}

std::int64_t count_periodic_points(const Subshift& x, std::int64_t d) {
  if (x.rank() == 1) return x.transfer().count_cyclic(d);
  std::int64_t n = 0;
  grid::enumerate_torus(x, d, std::size_t{1} << 40,
                        [&](const std::vector<std::uint8_t>&) { ++n; });
  return n;
}

Configuration configuration_through_word(const Subshift& x, const std::vector<std::uint8_t>& w) {
  if (x.rank() != 1) fail(ErrorCode::unsupported, "word pumping needs a rank-1 subshift");
  if (w.empty()) fail(ErrorCode::invalid_argument, "word must be nonempty");
  const TransferGraph& g = x.transfer();
  if (!g.word_globally_admissible(w.data(), w.size()))
    fail(ErrorCode::invalid_argument, "word is not globally admissible");
  int m = g.span();
  int k = g.alphabet_size();
  if (m == 1) {
    // single-site memory: tails may repeat the end letters freely
    return Configuration::bi_tail(x.alphabet(), {w.front()}, 0, w, {w.back()});
  }
  std::vector<std::uint8_t> word = w;
  if (word.size() + 1 < static_cast<std::size_t>(m)) {
    // extend to vertex length with an admissible completion
    bool done = false;
    std::vector<std::uint8_t> probe = word;
    probe.resize(static_cast<std::size_t>(m - 1));
    std::size_t free_cells = static_cast<std::size_t>(m - 1) - word.size();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < free_cells; ++i) combos *= static_cast<std::size_t>(k);
    for (std::size_t c = 0; c < combos && !done; ++c) {
      std::size_t rem = c;
      for (std::size_t i = 0; i < free_cells; ++i) {
        probe[word.size() + i] = static_cast<std::uint8_t>(rem % static_cast<std::size_t>(k));
        rem /= static_cast<std::size_t>(k);
      }
      if (g.word_globally_admissible(probe.data(), probe.size())) {
        word = probe;
        done = true;
      }
    }
    if (!done) fail(ErrorCode::internal, "globally admissible word lost its extension");
  }

  auto first_letter = [&](std::size_t v) {
    std::size_t top = g.vertex_count() / static_cast<std::size_t>(k);
    return static_cast<std::uint8_t>(v / top);
  };

  // Walk backward from the start vertex to a cycle. back[j]'s window
  // starts at position -j, so value(-j) is back[j]'s first letter.
  std::size_t v0 = g.encode(word.data(), m - 1);
  std::vector<std::size_t> back = {v0};
  std::map<std::size_t, std::size_t> seen_b = {{v0, 0}};
  std::vector<std::uint8_t> left_stem;  // values at positions -i .. -1
  std::vector<std::uint8_t> leftw;
  while (true) {
    std::size_t cur = back.back();
    std::size_t pred = g.vertex_count();
    for (std::size_t u = 0; u < g.vertex_count() && pred == g.vertex_count(); ++u) {
      if (!g.left_extendable(u)) continue;
      for (int c = 0; c < k; ++c)
        if (g.edge_ok(u, c) && g.edge_target(u, c) == cur) {
          pred = u;
          break;
        }
    }
    if (pred == g.vertex_count()) fail(ErrorCode::internal, "left-extendable vertex lost its edge");
    auto it = seen_b.find(pred);
    if (it != seen_b.end()) {
      // forward cycle from the junction back[i]:
      //   back[i] -> back[n-1] -> ... -> back[i+1] -> back[i]
      std::size_t i = it->second;
      std::size_t n = back.size();
      leftw.push_back(first_letter(back[i]));
      if (i + 1 < n) {
        leftw.push_back(first_letter(back[n - 1]));
        for (std::size_t j = n - 1; j > i + 1; --j) leftw.push_back(first_letter(back[j - 1]));
      }
      // values between the junction and the word start
      for (std::size_t j = i; j > 0; --j) left_stem.push_back(first_letter(back[j]));
      break;
    }
    seen_b[pred] = back.size();
    back.push_back(pred);
  }

  // Walk forward from the end vertex to a cycle, collecting appended letters.
  std::size_t v1 =
      g.encode(word.data() + (static_cast<std::int64_t>(word.size()) - (m - 1)), m - 1);
  std::vector<std::size_t> fwd = {v1};
  std::map<std::size_t, std::size_t> seen_f = {{v1, 0}};
  std::vector<std::uint8_t> right_stem, rightw;
  std::vector<std::uint8_t> fwd_letters;
  while (true) {
    std::size_t cur = fwd.back();
    std::size_t succ = g.vertex_count();
    std::uint8_t letter = 0;
    for (int c = 0; c < k && succ == g.vertex_count(); ++c)
      if (g.edge_ok(cur, c) && g.right_extendable(g.edge_target(cur, c))) {
        succ = g.edge_target(cur, c);
        letter = static_cast<std::uint8_t>(c);
      }
    if (succ == g.vertex_count()) fail(ErrorCode::internal, "right-extendable vertex lost its edge");
    auto it = seen_f.find(succ);
    if (it != seen_f.end()) {
      std::size_t i = it->second;
      for (std::size_t j = 0; j < i; ++j) right_stem.push_back(fwd_letters[j]);
      for (std::size_t j = i; j < fwd_letters.size(); ++j) rightw.push_back(fwd_letters[j]);
      rightw.push_back(letter);
      break;
    }
    fwd_letters.push_back(letter);
    seen_f[succ] = fwd.size();
    fwd.push_back(succ);
  }

  std::int64_t mid_lo = -static_cast<std::int64_t>(left_stem.size());
  std::vector<std::uint8_t> mid = left_stem;
  mid.insert(mid.end(), word.begin(), word.end());
  mid.insert(mid.end(), right_stem.begin(), right_stem.end());
  Configuration out = Configuration::bi_tail(x.alphabet(), leftw, mid_lo, mid, rightw);
  if (!x.contains(out)) fail(ErrorCode::internal, "pumped configuration escaped the subshift");
  return out;
}

Subshift full_shift(const Alphabet& a, const GroupModel& g) {
  FiniteSubset memory(g, {g.identity()});
  std::vector<Pattern> adm;
  for (int c = 0; c < a.size(); ++c)
    adm.emplace_back(memory, std::vector<std::uint8_t>{static_cast<std::uint8_t>(c)});
  return Subshift(a, g, memory, std::move(adm));
}

Subshift golden_mean() {
  Alphabet a("01");
  GroupModel g = GroupModel::lattice(1);
  FiniteSubset memory(g, {GroupElement{{0}}, GroupElement{{1}}});
  std::vector<Pattern> adm;
  adm.emplace_back(memory, std::vector<std::uint8_t>{0, 0});
  adm.emplace_back(memory, std::vector<std::uint8_t>{0, 1});
  adm.emplace_back(memory, std::vector<std::uint8_t>{1, 0});
  return Subshift(a, g, memory, std::move(adm));
}

Subshift weiss_sft() {
  Alphabet a("012");
  GroupModel g = GroupModel::lattice(1);
  FiniteSubset memory(g, {GroupElement{{0}}, GroupElement{{1}}});
  std::vector<Pattern> adm;
  for (const char* w : {"00", "01", "11", "12", "22"})
    adm.emplace_back(memory, std::vector<std::uint8_t>{static_cast<std::uint8_t>(a.index(w[0])),
                                                       static_cast<std::uint8_t>(a.index(w[1]))});
  return Subshift(a, g, memory, std::move(adm));
}

Subshift hard_ball(const GroupModel& g, const FiniteSubset& f) {
  if (g.kind() != GroupKind::lattice) fail(ErrorCode::unsupported, "hard-ball needs a lattice group");
  if (f.model() != g) fail(ErrorCode::model_mismatch, "hard-ball F over wrong group");
  if (f.empty_set()) fail(ErrorCode::invalid_argument, "hard-ball F must be nonempty");
  if (f.contains(g.identity()))
    fail(ErrorCode::invalid_argument, "hard-ball F must not contain the identity");
  Alphabet a("01");
  FiniteSubset memory = FiniteSubset(g, {g.identity()}).unite(f);
  // admissible: all windows without a 1 at the origin paired with a 1 in F
  std::size_t n = memory.size();
  std::size_t origin_idx = 0;
  std::vector<std::size_t> f_idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.is_identity(memory.elements()[i])) origin_idx = i;
    if (f.contains(memory.elements()[i])) f_idx.push_back(i);
  }
  std::vector<Pattern> adm;
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    std::vector<std::uint8_t> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = (code >> i) & 1;
    bool ok = true;
    if (vals[origin_idx] == 1)
      for (auto fi : f_idx)
        if (vals[fi] == 1) ok = false;
    if (ok) adm.emplace_back(memory, std::move(vals));
  }
  return Subshift(a, g, memory, std::move(adm));
}

Subshift zeros_sft() {
  Alphabet a("01");
  GroupModel g = GroupModel::lattice(1);
  FiniteSubset memory(g, {g.identity()});
  std::vector<Pattern> adm;
  adm.emplace_back(memory, std::vector<std::uint8_t>{0});
  return Subshift(a, g, memory, std::move(adm));
}

}  // namespace symdyn
