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

#include "ca.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "grid.hpp"
#include "transfer.hpp"

namespace symdyn {

LocalRule::LocalRule(Alphabet a, GroupModel g, FiniteSubset s, std::vector<std::uint8_t> t)
    : alphabet(std::move(a)), group(g), memory(std::move(s)), table(std::move(t)) {
  if (memory.empty_set()) fail(ErrorCode::invalid_argument, "rule memory set must be nonempty");
  if (memory.model() != group) fail(ErrorCode::model_mismatch, "rule memory over wrong group");
  std::size_t expect = 1;
  for (std::size_t i = 0; i < memory.size(); ++i) {
    expect *= static_cast<std::size_t>(alphabet.size());
    if (expect > (std::size_t{1} << 24)) fail(ErrorCode::budget, "rule table too large");
  }
  if (table.size() != expect)
    fail(ErrorCode::invalid_argument, "rule table must be total on A^S");
  for (auto v : table)
    if (v >= alphabet.size()) fail(ErrorCode::invalid_argument, "rule output out of range");
}

std::uint8_t LocalRule::apply_window(const std::uint8_t* values) const {
  std::size_t code = 0;
  for (std::size_t i = 0; i < memory.size(); ++i)
    code = code * static_cast<std::size_t>(alphabet.size()) + values[i];
  return table[code];
}

namespace {

// Relative S offsets in the sorted order used by the rule table.
std::vector<std::vector<std::int64_t>> rule_offsets(const LocalRule& rule) {
  std::vector<std::vector<std::int64_t>> offs;
  for (const auto& e : rule.memory.elements()) offs.push_back(e.word);
  return offs;
}

// ---- rank-1 combined input graph --------------------------------------
//
// Vertices are (ell-1)-letter input windows, edges are ell-letter windows
// that satisfy the domain's memory constraint at their anchor; every edge
// emits the rule's output at the anchor. Bi-infinite paths = points of X,
// and the emitted sequence is the image point.
struct WindowGraph {
  int ell = 2;
  int k = 2;
  std::int64_t w_lo = 0;
  std::size_t nv = 1;
  std::size_t tail_mod = 1;
  std::vector<char> edge_ok;
  std::vector<std::uint8_t> out;
  std::vector<char> keep_b, keep_f;

  std::size_t target(std::size_t v, int c) const {
    return (v % tail_mod) * static_cast<std::size_t>(k) + static_cast<std::size_t>(c);
  }
  bool ok(std::size_t v, int c) const {
    return edge_ok[v * static_cast<std::size_t>(k) + static_cast<std::size_t>(c)] != 0;
  }
  std::uint8_t emit(std::size_t v, int c) const {
    return out[v * static_cast<std::size_t>(k) + static_cast<std::size_t>(c)];
  }
  int first_letter(std::size_t v) const {
    std::size_t top = nv / static_cast<std::size_t>(k);
    return static_cast<int>(v / top);
  }
};

WindowGraph build_window_graph(const LocalRule& rule, const Subshift& x) {
  if (x.rank() != 1) fail(ErrorCode::unsupported, "decision procedures need a rank-1 domain");
  WindowGraph g;
  g.k = x.alphabet().size();

  std::int64_t lo = 0, hi = 0;
  for (const auto& e : x.memory().elements()) {
    lo = std::min(lo, e.word[0]);
    hi = std::max(hi, e.word[0]);
  }
  for (const auto& e : rule.memory.elements()) {
    lo = std::min(lo, e.word[0]);
    hi = std::max(hi, e.word[0]);
  }
  g.w_lo = lo;
  g.ell = static_cast<int>(hi - lo + 1);
  if (g.ell < 2) g.ell = 2;  // vertices must carry at least one letter
  if (g.ell * std::log2(static_cast<double>(g.k)) > 20)
    fail(ErrorCode::budget, "combined window too large for the decision graph");

  g.nv = 1;
  for (int i = 0; i < g.ell - 1; ++i) g.nv *= static_cast<std::size_t>(g.k);
  g.tail_mod = g.nv / static_cast<std::size_t>(g.k);
  if (g.ell == 2) g.tail_mod = 1;

  std::vector<std::size_t> dom_idx;
  for (const auto& e : x.memory().elements())
    dom_idx.push_back(static_cast<std::size_t>(e.word[0] - lo));
  std::vector<std::size_t> rule_idx;
  for (const auto& e : rule.memory.elements())
    rule_idx.push_back(static_cast<std::size_t>(e.word[0] - lo));

  g.edge_ok.assign(g.nv * static_cast<std::size_t>(g.k), 0);
  g.out.assign(g.nv * static_cast<std::size_t>(g.k), 0);
  std::vector<std::uint8_t> word(static_cast<std::size_t>(g.ell));
  std::vector<std::uint8_t> dom_tuple(dom_idx.size());
  std::vector<std::uint8_t> rule_tuple(rule_idx.size());
  for (std::size_t v = 0; v < g.nv; ++v) {
    std::size_t rem = v;
    for (int i = g.ell - 2; i >= 0; --i) {
      word[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rem % static_cast<std::size_t>(g.k));
      rem /= static_cast<std::size_t>(g.k);
    }
    for (int c = 0; c < g.k; ++c) {
      word[static_cast<std::size_t>(g.ell - 1)] = static_cast<std::uint8_t>(c);
      for (std::size_t i = 0; i < dom_idx.size(); ++i) dom_tuple[i] = word[dom_idx[i]];
      if (!x.window_admissible(dom_tuple.data())) continue;
      g.edge_ok[v * static_cast<std::size_t>(g.k) + static_cast<std::size_t>(c)] = 1;
      for (std::size_t i = 0; i < rule_idx.size(); ++i) rule_tuple[i] = word[rule_idx[i]];
      g.out[v * static_cast<std::size_t>(g.k) + static_cast<std::size_t>(c)] =
          rule.apply_window(rule_tuple.data());
    }
  }

  // prune to left/right extendable vertices
  g.keep_b.assign(g.nv, 1);
  g.keep_f.assign(g.nv, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < g.nv; ++v) {
      if (!g.keep_f[v]) continue;
      bool ok = false;
      for (int c = 0; c < g.k && !ok; ++c) ok = g.ok(v, c) && g.keep_f[g.target(v, c)];
      if (!ok) {
        g.keep_f[v] = 0;
        changed = true;
      }
    }
  }
  changed = true;
  std::vector<char> has_in(g.nv, 0);
  while (changed) {
    changed = false;
    std::fill(has_in.begin(), has_in.end(), 0);
    for (std::size_t v = 0; v < g.nv; ++v) {
      if (!g.keep_b[v]) continue;
      for (int c = 0; c < g.k; ++c)
        if (g.ok(v, c)) has_in[g.target(v, c)] = 1;
    }
    for (std::size_t v = 0; v < g.nv; ++v)
      if (g.keep_b[v] && !has_in[v]) {
        g.keep_b[v] = 0;
        changed = true;
      }
  }
  return g;
}

}  // namespace

bool preserves_subshift(const LocalRule& rule, const Subshift& x, int margin) {
  if (rule.alphabet != x.alphabet() || rule.group != x.group())
    fail(ErrorCode::model_mismatch, "rule and subshift must share alphabet and group");
  if (x.rank() == 1) {
    std::int64_t s_lo = rule.memory.elements().front().word[0];
    std::int64_t s_hi = s_lo;
    for (const auto& e : rule.memory.elements()) {
      s_lo = std::min(s_lo, e.word[0]);
      s_hi = std::max(s_hi, e.word[0]);
    }
    std::int64_t m = x.memory_extent()[0];
    std::size_t in_len = static_cast<std::size_t>(m + (s_hi - s_lo));
    const auto& graph = x.transfer();
    std::vector<std::size_t> rule_idx;
    for (const auto& e : rule.memory.elements())
      rule_idx.push_back(static_cast<std::size_t>(e.word[0] - s_lo));
    std::vector<std::uint8_t> rule_tuple(rule_idx.size());
    std::vector<std::uint8_t> out(static_cast<std::size_t>(m));
    std::vector<std::uint8_t> dom_tuple(x.memory_offsets().size());
    bool preserved = true;
    graph.enumerate_words(in_len, std::size_t{1} << 22, [&](const std::uint8_t* w, std::size_t) {
      if (!preserved) return;
      for (std::int64_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < rule_idx.size(); ++i)
          rule_tuple[i] = w[static_cast<std::size_t>(j) + rule_idx[i]];
        out[static_cast<std::size_t>(j)] = rule.apply_window(rule_tuple.data());
      }
      for (std::size_t i = 0; i < x.memory_offsets().size(); ++i)
        dom_tuple[i] = out[static_cast<std::size_t>(x.memory_offsets()[i][0])];
      if (!x.window_admissible(dom_tuple.data())) preserved = false;
    });
    return preserved;
  }
  if (x.rank() != 2) fail(ErrorCode::unsupported, "rule preservation supports rank 1 and 2");
  // conservative rank-2 check on margin-admissible input boxes
  auto s_offs = rule_offsets(rule);
  std::vector<std::int64_t> s_lo(2, 0), s_hi(2, 0);
  for (const auto& o : s_offs)
    for (int i = 0; i < 2; ++i) {
      s_lo[static_cast<std::size_t>(i)] = std::min(s_lo[static_cast<std::size_t>(i)], o[static_cast<std::size_t>(i)]);
      s_hi[static_cast<std::size_t>(i)] = std::max(s_hi[static_cast<std::size_t>(i)], o[static_cast<std::size_t>(i)]);
    }
  const auto& ext = x.memory_extent();
  std::vector<std::int64_t> dims = {ext[0] + (s_hi[0] - s_lo[0]), ext[1] + (s_hi[1] - s_lo[1])};
  bool preserved = true;
  std::vector<std::uint8_t> rule_tuple(s_offs.size());
  std::vector<std::uint8_t> dom_tuple(x.memory_offsets().size());
  grid::enumerate_box_with_margin(x, dims, margin, std::size_t{1} << 22,
                                  [&](const std::vector<std::uint8_t>& cells) {
    if (!preserved) return;
    // outputs on the memory bounding box anchored at (-s_lo)
    std::vector<std::uint8_t> out(static_cast<std::size_t>(ext[0] * ext[1]));
    for (std::int64_t u = 0; u < ext[0]; ++u)
      for (std::int64_t v = 0; v < ext[1]; ++v) {
        for (std::size_t i = 0; i < s_offs.size(); ++i) {
          std::int64_t iu = u + s_offs[i][0] - s_lo[0];
          std::int64_t iv = v + s_offs[i][1] - s_lo[1];
          rule_tuple[i] = cells[static_cast<std::size_t>(iu * dims[1] + iv)];
        }
        out[static_cast<std::size_t>(u * ext[1] + v)] = rule.apply_window(rule_tuple.data());
      }
    for (std::size_t i = 0; i < x.memory_offsets().size(); ++i) {
      const auto& o = x.memory_offsets()[i];
      dom_tuple[i] = out[static_cast<std::size_t>(o[0] * ext[1] + o[1])];
    }
    if (!x.window_admissible(dom_tuple.data())) preserved = false;
  });
  return preserved;
}

Endomorphism::Endomorphism(LocalRule rule, Subshift domain)
    : rule_(std::move(rule)), domain_(std::move(domain)) {
  if (!preserves_subshift(rule_, domain_))
    fail(ErrorCode::domain, "local rule does not preserve the subshift");
}

Configuration apply(const Endomorphism& f, const Configuration& x) {
  const auto& rule = f.rule();
  const auto& dom = f.domain();
  if (!dom.contains(x)) fail(ErrorCode::domain, "configuration outside the endomorphism domain");

  if (x.rank() == 1) {
    std::int64_t s_lo = rule.memory.elements().front().word[0], s_hi = s_lo;
    for (const auto& e : rule.memory.elements()) {
      s_lo = std::min(s_lo, e.word[0]);
      s_hi = std::max(s_hi, e.word[0]);
    }
    std::vector<std::int64_t> s_pos;
    for (const auto& e : rule.memory.elements()) s_pos.push_back(e.word[0]);
    std::vector<std::uint8_t> tuple(s_pos.size());
    auto out_at = [&](std::int64_t p) {
      for (std::size_t i = 0; i < s_pos.size(); ++i)
        tuple[i] = x.value_z(p + s_pos[i]);
      return rule.apply_window(tuple.data());
    };
    std::int64_t l = static_cast<std::int64_t>(x.left_word().size());
    std::int64_t r = static_cast<std::int64_t>(x.right_word().size());
    std::int64_t out_lo = x.mid_lo() - s_hi - l;
    std::int64_t out_hi = x.mid_hi() - s_lo + r;
    std::vector<std::uint8_t> mid;
    for (std::int64_t p = out_lo; p < out_hi; ++p) mid.push_back(out_at(p));
    std::vector<std::uint8_t> leftw(static_cast<std::size_t>(l));
    for (std::int64_t i = 0; i < l; ++i)
      leftw[static_cast<std::size_t>(i)] = out_at(out_lo - l + i);
    std::vector<std::uint8_t> rightw(static_cast<std::size_t>(r));
    for (std::int64_t i = 0; i < r; ++i)
      rightw[static_cast<std::size_t>(i)] = out_at(out_hi + i);
    return Configuration::bi_tail(x.alphabet(), leftw, out_lo, mid, rightw);
  }

  // rank >= 2: same periods; overrides move by the rule support
  auto s_offs = rule_offsets(rule);
  const auto& periods = x.torus_periods();
  std::size_t rk = periods.size();
  std::int64_t cells = 1;
  for (auto p : periods) cells *= p;
  std::vector<std::uint8_t> data(static_cast<std::size_t>(cells));
  std::vector<std::uint8_t> tuple(s_offs.size());
  std::vector<std::int64_t> c(rk, 0), pos(rk);
  auto background_out = [&](const std::vector<std::int64_t>& at) {
    for (std::size_t i = 0; i < s_offs.size(); ++i) {
      for (std::size_t j = 0; j < rk; ++j) pos[j] = at[j] + s_offs[i][j];
      tuple[i] = x.background_at(pos);
    }
    return rule.apply_window(tuple.data());
  };
  for (std::int64_t idx = 0; idx < cells; ++idx) {
    data[static_cast<std::size_t>(idx)] = background_out(c);
    std::size_t axis = rk;
    while (axis > 0) {
      --axis;
      if (++c[axis] < periods[axis]) break;
      c[axis] = 0;
    }
  }
  Configuration out = Configuration::periodic_lattice(x.alphabet(), periods, std::move(data));
  if (!x.overrides().empty()) {
    std::vector<std::pair<GroupElement, std::uint8_t>> patches;
    std::set<std::vector<std::int64_t>> affected;
    for (const auto& [kpos, v] : x.overrides())
      for (const auto& o : s_offs) {
        std::vector<std::int64_t> at(rk);
        for (std::size_t j = 0; j < rk; ++j) at[j] = kpos[j] - o[j];
        affected.insert(at);
      }
    std::vector<std::uint8_t> tup(s_offs.size());
    for (const auto& at : affected) {
      for (std::size_t i = 0; i < s_offs.size(); ++i) {
        std::vector<std::int64_t> p2(rk);
        for (std::size_t j = 0; j < rk; ++j) p2[j] = at[j] + s_offs[i][j];
        tup[i] = x.value(GroupElement{p2});
      }
      patches.emplace_back(GroupElement{at}, rule.apply_window(tup.data()));
    }
    out = out.with_overrides(patches);
  }
  return out;
}

namespace {

// witness assembly helpers -------------------------------------------------

struct PathStep {
  std::size_t pair;  // u * nv + v
  int c1 = -1, c2 = -1;  // letters appended entering this vertex (absent for the first)
};

struct TailPath {
  std::vector<PathStep> cycle;  // forward order; cycle[0] is the stem junction
  std::vector<PathStep> stem;   // from the junction (exclusive) to the anchor (inclusive)
};

}  // namespace

InjectivityResult decide_injective(const Endomorphism& f) {
  InjectivityResult res;
  const auto& x = f.domain();
  WindowGraph g = build_window_graph(f.rule(), x);
  std::size_t nv = g.nv;
  int k = g.k;

  std::vector<char> essential(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) essential[v] = g.keep_b[v] && g.keep_f[v];

  // pair graph on essential vertices, edges pair equal outputs
  std::size_t np = nv * nv;
  std::vector<char> alive(np, 0);
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t v = 0; v < nv; ++v) alive[u * nv + v] = essential[u] && essential[v];

  auto for_each_edge = [&](std::size_t p, auto&& fn) {
    std::size_t u = p / nv, v = p % nv;
    for (int c1 = 0; c1 < k; ++c1) {
      if (!g.ok(u, c1)) continue;
      for (int c2 = 0; c2 < k; ++c2) {
        if (!g.ok(v, c2)) continue;
        if (g.emit(u, c1) != g.emit(v, c2)) continue;
        fn(g.target(u, c1) * nv + g.target(v, c2), c1, c2);
      }
    }
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // out-degree pruning
    for (std::size_t p = 0; p < np; ++p) {
      if (!alive[p]) continue;
      bool ok = false;
      for_each_edge(p, [&](std::size_t q, int, int) { ok = ok || alive[q]; });
      if (!ok) {
        alive[p] = 0;
        changed = true;
      }
    }
    // in-degree pruning
    std::vector<char> has_in(np, 0);
    for (std::size_t p = 0; p < np; ++p) {
      if (!alive[p]) continue;
      for_each_edge(p, [&](std::size_t q, int, int) { has_in[q] = 1; });
    }
    for (std::size_t p = 0; p < np; ++p)
      if (alive[p] && !has_in[p]) {
        alive[p] = 0;
        changed = true;
      }
  }

  std::size_t bad = np;
  for (std::size_t p = 0; p < np && bad == np; ++p)
    if (alive[p] && p / nv != p % nv) bad = p;
  if (bad == np) {
    res.injective = true;
    return res;
  }

  // witness: pick a bi-infinite pair path through `bad`, eventually
  // periodic on both sides
  auto pick_succ = [&](std::size_t p) {
    std::size_t chosen = np;
    int l1 = -1, l2 = -1;
    for_each_edge(p, [&](std::size_t q, int c1, int c2) {
      if (chosen == np && alive[q]) {
        chosen = q;
        l1 = c1;
        l2 = c2;
      }
    });
    return std::tuple<std::size_t, int, int>(chosen, l1, l2);
  };
  auto pick_pred = [&](std::size_t p) {
    for (std::size_t q = 0; q < np; ++q) {
      if (!alive[q]) continue;
      std::size_t chosen = np;
      int l1 = -1, l2 = -1;
      for_each_edge(q, [&](std::size_t t, int c1, int c2) {
        if (t == p && chosen == np) {
          chosen = q;
          l1 = c1;
          l2 = c2;
        }
      });
      if (chosen != np) return std::tuple<std::size_t, int, int>(chosen, l1, l2);
    }
    fail(ErrorCode::internal, "pruned pair vertex lost its predecessor");
  };

  // walk backward to a cycle
  std::vector<std::size_t> back = {bad};
  std::vector<std::pair<int, int>> back_letters = {{-1, -1}};  // letters into back[i] from back[i+1]
  std::map<std::size_t, std::size_t> back_pos = {{bad, 0}};
  TailPath left;
  while (true) {
    auto [pred, c1, c2] = pick_pred(back.back());
    back_letters.back() = {c1, c2};
    auto it = back_pos.find(pred);
    if (it != back_pos.end()) {
      // the forward cycle through the junction back[i]:
      //   back[i] -> back[n-1] -> back[n-2] -> ... -> back[i+1] -> back[i]
      std::size_t i = it->second;
      std::size_t n = back.size();
      left.cycle.push_back({back[i], -1, -1});
      left.cycle.push_back({back[n - 1], back_letters[n - 1].first, back_letters[n - 1].second});
      for (std::size_t j = n - 1; j > i + 1; --j)
        left.cycle.push_back({back[j - 1], back_letters[j - 1].first, back_letters[j - 1].second});
      if (left.cycle.size() > 1 && left.cycle.back().pair == left.cycle.front().pair)
        left.cycle.pop_back();  // self-loop degenerates to a single vertex
      // stem: back[i] -> back[i-1] -> ... -> back[0] (the anchor)
      for (std::size_t j = i; j > 0; --j)
        left.stem.push_back({back[j - 1], back_letters[j - 1].first, back_letters[j - 1].second});
      break;
    }
    back_pos[pred] = back.size();
    back.push_back(pred);
    back_letters.push_back({-1, -1});
  }

  // walk forward to a cycle
  std::vector<std::size_t> fwd = {bad};
  std::vector<std::pair<int, int>> fwd_letters;  // letters into fwd[i+1]
  std::map<std::size_t, std::size_t> fwd_pos = {{bad, 0}};
  TailPath right;
  while (true) {
    auto [succ, c1, c2] = pick_succ(fwd.back());
    if (succ == np) fail(ErrorCode::internal, "pruned pair vertex lost its successor");
    auto it = fwd_pos.find(succ);
    if (it != fwd_pos.end()) {
      std::size_t i = it->second;
      // stem: fwd[1] .. fwd[i] entered with fwd_letters[0..i-1]
      for (std::size_t j = 1; j <= i; ++j)
        right.stem.push_back({fwd[j], fwd_letters[j - 1].first, fwd_letters[j - 1].second});
      // cycle: fwd[i] -> fwd[i+1] -> ... -> fwd[n-1] -> fwd[i]
      right.cycle.push_back({fwd[i], -1, -1});
      for (std::size_t j = i + 1; j < fwd.size(); ++j)
        right.cycle.push_back({fwd[j], fwd_letters[j - 1].first, fwd_letters[j - 1].second});
      // closing letters into fwd[i]:
      right.cycle[0].c1 = c1;
      right.cycle[0].c2 = c2;
      break;
    }
    fwd_letters.push_back({c1, c2});
    fwd_pos[succ] = fwd.size();
    fwd.push_back(succ);
  }

  // assemble each component: left cycle word, middle, right cycle word
  auto build_component = [&](bool second) -> Configuration {
    auto first_of = [&](std::size_t pair) {
      std::size_t vert = second ? pair % nv : pair / nv;
      return static_cast<std::uint8_t>(g.first_letter(vert));
    };
    auto letter_of = [&](const PathStep& s) {
      return static_cast<std::uint8_t>(second ? s.c2 : s.c1);
    };
    // left tail: first letters of the cycle vertices (forward order)
    std::vector<std::uint8_t> leftw;
    for (const auto& s : left.cycle) leftw.push_back(first_of(s.pair));
    // middle: the junction vertex letters, then every appended letter
    // along stem-left, anchor, stem-right
    std::vector<std::uint8_t> mid;
    std::size_t junction = left.cycle[0].pair;
    {
      // decode the (ell-1) letters of the junction's component vertex
      std::size_t vert = second ? junction % nv : junction / nv;
      std::vector<std::uint8_t> letters(static_cast<std::size_t>(g.ell - 1));
      std::size_t rem = vert;
      for (int i = g.ell - 2; i >= 0; --i) {
        letters[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(rem % static_cast<std::size_t>(k));
        rem /= static_cast<std::size_t>(k);
      }
      mid = letters;
    }
    for (const auto& s : left.stem) mid.push_back(letter_of(s));
    for (const auto& s : right.stem) mid.push_back(letter_of(s));
    // right tail: appended letters around the right cycle starting at its entry
    std::vector<std::uint8_t> rightw;
    for (std::size_t j = 0; j < right.cycle.size(); ++j) {
      const auto& nxt = right.cycle[(j + 1) % right.cycle.size()];
      rightw.push_back(letter_of(nxt));
    }
    return Configuration::bi_tail(x.alphabet(), leftw, 0, mid, rightw);
  };

  Configuration wx = build_component(false);
  Configuration wy = build_component(true);
  // independent re-verification by direct application
  if (wx == wy) fail(ErrorCode::internal, "injectivity witness components coincide");
  if (!x.contains(wx) || !x.contains(wy))
    fail(ErrorCode::internal, "injectivity witness escaped the domain");
  if (!(apply(f, wx) == apply(f, wy)))
    fail(ErrorCode::internal, "injectivity witness images differ");
  res.injective = false;
  res.witness_x = wx;
  res.witness_y = wy;
  return res;
}

SurjectivityResult decide_surjective(const Endomorphism& f) {
  SurjectivityResult res;
  const auto& x = f.domain();
  WindowGraph g = build_window_graph(f.rule(), x);
  const TransferGraph& t = x.transfer();
  int k = g.k;

  // essential input vertices, bitmask-encoded
  std::vector<std::size_t> ess;
  std::vector<std::size_t> ess_index(g.nv, static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < g.nv; ++v)
    if (g.keep_b[v] && g.keep_f[v]) {
      ess_index[v] = ess.size();
      ess.push_back(v);
    }
  if (ess.size() > 64) fail(ErrorCode::budget, "input graph too large for the subset construction");
  std::uint64_t full = ess.empty() ? 0 : (ess.size() == 64 ? ~0ull : (1ull << ess.size()) - 1);

  // transition on an output letter
  auto consume = [&](std::uint64_t mask, std::uint8_t letter) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < ess.size(); ++i) {
      if (!(mask & (1ull << i))) continue;
      std::size_t v = ess[i];
      for (int c = 0; c < k; ++c) {
        if (!g.ok(v, c) || g.emit(v, c) != letter) continue;
        std::size_t tgt = g.target(v, c);
        if (ess_index[tgt] != static_cast<std::size_t>(-1)) out |= 1ull << ess_index[tgt];
      }
    }
    return out;
  };

  // BFS over (preimage mask, domain transfer vertex)
  struct Node {
    std::uint64_t mask;
    std::size_t tvert;
    std::size_t parent;
    std::uint8_t letter;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::uint64_t> seen;
  auto key = [&](std::uint64_t mask, std::size_t tv) {
    return mask * 2654435761u + tv * 40503u + (mask >> 32);
  };
  std::vector<std::size_t> queue;

  int mt = t.span();
  // seed with every essential domain vertex (its m-1 letters are the
  // start of the candidate word)
  std::vector<std::uint8_t> seedword(static_cast<std::size_t>(std::max(mt - 1, 0)));
  std::vector<std::vector<std::uint8_t>> seed_prefix;
  for (std::size_t tv = 0; tv < t.vertex_count(); ++tv) {
    if (!t.essential(tv)) continue;
    std::size_t rem = tv;
    for (int i = mt - 2; i >= 0; --i) {
      seedword[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rem % static_cast<std::size_t>(k));
      rem /= static_cast<std::size_t>(k);
    }
    std::uint64_t mask = full;
    bool dead = false;
    for (int i = 0; i < mt - 1 && !dead; ++i) {
      mask = consume(mask, seedword[static_cast<std::size_t>(i)]);
      if (!mask) dead = true;
    }
    if (dead) {
      // the seed word itself is an orphan
      std::vector<std::uint8_t> w(seedword.begin(), seedword.end());
      res.surjective = false;
      std::vector<GroupElement> sup;
      for (std::size_t i = 0; i < w.size(); ++i)
        sup.push_back(GroupElement{{static_cast<std::int64_t>(i)}});
      res.orphan = Pattern(FiniteSubset(x.group(), sup), w);
      break;
    }
    if (seen.insert(key(mask, tv)).second) {
      nodes.push_back({mask, tv, static_cast<std::size_t>(-1), 0});
      seed_prefix.push_back(seedword);
      queue.push_back(nodes.size() - 1);
    }
  }

  std::size_t orphan_node = static_cast<std::size_t>(-1);
  std::uint8_t orphan_letter = 0;
  if (!res.orphan) {
    for (std::size_t qi = 0; qi < queue.size() && orphan_node == static_cast<std::size_t>(-1); ++qi) {
      std::size_t ni = queue[qi];
      for (int c = 0; c < k; ++c) {
        // extend within the domain language
        if (mt >= 2) {
          if (!t.edge_ok(nodes[ni].tvert, c)) continue;
        } else {
          if (!t.edge_ok(0, c)) continue;
        }
        std::size_t tv2 = mt >= 2 ? t.edge_target(nodes[ni].tvert, c) : 0;
        if (!t.essential(tv2)) continue;
        std::uint64_t m2 = consume(nodes[ni].mask, static_cast<std::uint8_t>(c));
        if (!m2) {
          orphan_node = ni;
          orphan_letter = static_cast<std::uint8_t>(c);
          break;
        }
        if (seen.insert(key(m2, tv2)).second) {
          nodes.push_back({m2, tv2, ni, static_cast<std::uint8_t>(c)});
          queue.push_back(nodes.size() - 1);
        }
      }
    }
    if (orphan_node == static_cast<std::size_t>(-1)) {
      res.surjective = true;
      return res;
    }
    // reconstruct the orphan word
    std::vector<std::uint8_t> letters = {orphan_letter};
    std::size_t cur = orphan_node;
    while (nodes[cur].parent != static_cast<std::size_t>(-1)) {
      letters.push_back(nodes[cur].letter);
      cur = nodes[cur].parent;
    }
    std::reverse(letters.begin(), letters.end());
    // cur is a seed node; nodes and seed_prefix were filled in lockstep
    std::vector<std::uint8_t> w = seed_prefix[cur];
    w.insert(w.end(), letters.begin(), letters.end());
    std::vector<GroupElement> sup;
    for (std::size_t i = 0; i < w.size(); ++i)
      sup.push_back(GroupElement{{static_cast<std::int64_t>(i)}});
    res.surjective = false;
    res.orphan = Pattern(FiniteSubset(x.group(), sup), w);
  }

  // exhaustive preimage re-verification, independent of the subset search
  const auto& w = res.orphan->values;
  std::size_t in_len = w.size() + static_cast<std::size_t>(g.ell - 1);
  if (in_len * std::log2(static_cast<double>(k)) <= 24) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < in_len; ++i) combos *= static_cast<std::size_t>(k);
    std::vector<std::uint8_t> u(in_len);
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t rem = code;
      for (std::size_t i = in_len; i-- > 0;) {
        u[i] = static_cast<std::uint8_t>(rem % static_cast<std::size_t>(k));
        rem /= static_cast<std::size_t>(k);
      }
      if (!t.word_globally_admissible(u.data(), in_len)) continue;
      bool matches = true;
      std::vector<std::uint8_t> rule_tuple;
      for (std::size_t j = 0; j < w.size() && matches; ++j) {
        rule_tuple.clear();
        for (const auto& e : f.rule().memory.elements())
          rule_tuple.push_back(u[static_cast<std::size_t>(
              static_cast<std::int64_t>(j) + e.word[0] - g.w_lo)]);
        matches = f.rule().apply_window(rule_tuple.data()) == w[j];
      }
      if (matches) fail(ErrorCode::internal, "orphan has a preimage; subset construction bug");
    }
  }
  return res;
}

LocalRule rule_from_id(const Alphabet& a, const GroupModel& g, const FiniteSubset& s,
                       std::uint64_t id) {
  std::size_t inputs = 1;
  for (std::size_t i = 0; i < s.size(); ++i) inputs *= static_cast<std::size_t>(a.size());
  std::vector<std::uint8_t> table(inputs);
  std::uint64_t rem = id;
  for (std::size_t j = 0; j < inputs; ++j) {
    table[j] = static_cast<std::uint8_t>(rem % static_cast<std::uint64_t>(a.size()));
    rem /= static_cast<std::uint64_t>(a.size());
  }
  return LocalRule(a, g, s, std::move(table));
}

SweepReport surjunctivity_sweep(const Subshift& x, const FiniteSubset& s, std::uint64_t rule_budget,
                                int threads) {
  if (x.rank() != 1) fail(ErrorCode::unsupported, "surjunctivity sweep needs a rank-1 subshift");
  if (s.model() != x.group()) fail(ErrorCode::model_mismatch, "sweep memory over wrong group");
  std::size_t inputs = 1;
  for (std::size_t i = 0; i < s.size(); ++i) inputs *= static_cast<std::size_t>(x.alphabet().size());
  double total_rules_log =
      static_cast<double>(inputs) * std::log2(static_cast<double>(x.alphabet().size()));
  if (total_rules_log > 40) fail(ErrorCode::budget, "rule space too large to enumerate");
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < inputs; ++j) total *= static_cast<std::uint64_t>(x.alphabet().size());

  SweepReport report;
  report.total_rules = total;
  if (total > rule_budget)
    fail(ErrorCode::budget, "surjunctivity sweep budget exceeded: " + std::to_string(total) +
                                " rules > budget " + std::to_string(rule_budget));

  report.entries.resize(total);
  std::atomic<std::uint64_t> next{0};
  int nthreads = std::max(1, threads);
  auto worker = [&]() {
    while (true) {
      std::uint64_t id = next.fetch_add(1);
      if (id >= total) return;
      SweepEntry e;
      e.rule_id = id;
      LocalRule rule = rule_from_id(x.alphabet(), x.group(), s, id);
      e.preserving = preserves_subshift(rule, x);
      if (e.preserving) {
        Endomorphism f(rule, x);
        auto inj = decide_injective(f);
        e.injective = inj.injective;
        if (e.injective) {
          auto sur = decide_surjective(f);
          e.surjective = sur.surjective;
          if (!sur.surjective) e.orphan = sur.orphan->str(x.alphabet());
        }
      }
      report.entries[id] = std::move(e);
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : report.entries) {
    if (e.preserving) ++report.preserving;
    if (e.preserving && e.injective) {
      ++report.injective;
      if (!e.surjective) ++report.injective_not_surjective;
    }
  }
  return report;
}

}  // namespace symdyn
