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

#include <algorithm>
#include <map>
#include <set>

#include "grid.hpp"
#include "transfer.hpp"

namespace symdyn {

namespace {

constexpr std::uint8_t kFree = 0xff;

// Globally admissible word on a window with some cells pinned; returns a
// completed word or nothing. Free cells are kFree.
std::optional<std::vector<std::uint8_t>> constrained_word(const TransferGraph& g,
                                                          std::vector<std::uint8_t> cells) {
  int m = g.span();
  int k = g.alphabet_size();
  std::size_t len = std::max(cells.size(), static_cast<std::size_t>(m - 1));
  cells.resize(len, kFree);
  std::size_t nv = g.vertex_count();

  // backward feasibility: B[j][v] = can finish from v before letter j
  std::size_t steps = len - static_cast<std::size_t>(m - 1);
  std::vector<std::vector<char>> feasible(steps + 1, std::vector<char>(nv, 0));
  for (std::size_t v = 0; v < nv; ++v) feasible[steps][v] = g.right_extendable(v);
  for (std::size_t j = steps; j-- > 0;) {
    std::size_t pos = static_cast<std::size_t>(m - 1) + j;
    for (std::size_t v = 0; v < nv; ++v) {
      char ok = 0;
      for (int c = 0; c < k && !ok; ++c) {
        if (cells[pos] != kFree && cells[pos] != c) continue;
        ok = g.edge_ok(v, c) && feasible[j + 1][g.edge_target(v, c)];
      }
      feasible[j][v] = ok;
    }
  }

  // pick a compatible left-extendable start vertex
  std::vector<std::uint8_t> word(len);
  std::size_t combos = 1;
  for (int i = 0; i < m - 1; ++i) combos *= static_cast<std::size_t>(k);
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t rem = code;
    bool compatible = true;
    for (int i = m - 2; i >= 0; --i) {
      auto c = static_cast<std::uint8_t>(rem % static_cast<std::size_t>(k));
      rem /= static_cast<std::size_t>(k);
      word[static_cast<std::size_t>(i)] = c;
      if (cells[static_cast<std::size_t>(i)] != kFree && cells[static_cast<std::size_t>(i)] != c)
        compatible = false;
    }
    if (!compatible) continue;
    std::size_t v = code;
    if (!g.left_extendable(v) || !feasible[0][v]) continue;
    // greedy completion along feasible edges
    bool dead = false;
    for (std::size_t j = 0; j < steps && !dead; ++j) {
      std::size_t pos = static_cast<std::size_t>(m - 1) + j;
      dead = true;
      for (int c = 0; c < k; ++c) {
        if (cells[pos] != kFree && cells[pos] != c) continue;
        if (g.edge_ok(v, c) && feasible[j + 1][g.edge_target(v, c)]) {
          word[pos] = static_cast<std::uint8_t>(c);
          v = g.edge_target(v, c);
          dead = false;
          break;
        }
      }
    }
    if (!dead) return word;
  }
  return std::nullopt;
}

FiniteSubset interval_subset(const GroupModel& g, std::int64_t lo, std::int64_t hi) {
  std::vector<GroupElement> elems;
  for (std::int64_t p = lo; p < hi; ++p) elems.push_back(GroupElement{{p}});
  return FiniteSubset(g, std::move(elems));
}

FiniteSubset box_subset(const GroupModel& g, const std::vector<std::int64_t>& lo,
                        const std::vector<std::int64_t>& hi) {
  std::vector<GroupElement> elems;
  std::vector<std::int64_t> c(lo);
  while (true) {
    elems.push_back(GroupElement{c});
    std::size_t axis = c.size();
    bool done = true;
    while (axis > 0) {
      --axis;
      if (++c[axis] < hi[axis]) {
        done = false;
        break;
      }
      c[axis] = lo[axis];
    }
    if (done) break;
  }
  return FiniteSubset(g, std::move(elems));
}

}  // namespace

ExpansivityCertificate uniform_expansivity_witness(const Subshift& x, const Rational& eps,
                                                   bool verify, std::size_t budget) {
  // eps must be a dyadic 2^-n
  if (eps.num != 1 || eps.den < 1 || (eps.den & (eps.den - 1)) != 0)
    fail(ErrorCode::invalid_argument, "epsilon must be 2^-n");
  int n = 0;
  for (std::int64_t d = eps.den; d > 1; d >>= 1) ++n;

  ExpansivityCertificate cert;
  cert.constant = Rational(1, 2);
  cert.witness = x.group().ball(n + 1);
  if (!verify) return cert;

  // window covering K * Omega_{n+1}
  FiniteSubset kk = set_product(cert.witness, cert.witness);
  std::vector<std::int64_t> lo(static_cast<std::size_t>(x.rank())), hi(lo);
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = hi[i] = 0;
    for (const auto& e : kk.elements()) {
      lo[i] = std::min(lo[i], e.word[i]);
      hi[i] = std::max(hi[i], e.word[i] + 1);
    }
  }
  FiniteSubset window = box_subset(x.group(), lo, hi);
  PatternSet pats = enumerate_patterns(x, window, budget);
  // indices of K and Omega_{n+1} inside the sorted window
  std::vector<std::size_t> k_idx, omega_idx;
  const auto& elems = window.elements();
  const FiniteSubset omega = cert.witness;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (cert.witness.contains(elems[i])) k_idx.push_back(i);
    if (omega.contains(elems[i])) omega_idx.push_back(i);
  }
  for (const auto& p : pats.patterns)
    for (const auto& q : pats.patterns) {
      bool agree_k = true;
      for (auto i : k_idx)
        if (p.values[i] != q.values[i]) {
          agree_k = false;
          break;
        }
      if (!agree_k) continue;
      for (auto i : omega_idx)
        if (p.values[i] != q.values[i])
          fail(ErrorCode::certificate,
               "expansivity witness violated: agreement on K does not force agreement on Omega");
    }
  cert.verified = true;
  return cert;
}

namespace {

std::set<std::int64_t> translate_set_z(const FiniteSubset& base, std::int64_t lo, std::int64_t hi) {
  // A * Delta for A = [lo, hi)
  std::set<std::int64_t> out;
  for (std::int64_t a = lo; a < hi; ++a)
    for (const auto& d : base.elements()) out.insert(a + d.word[0]);
  return out;
}

CheckResult strong_irreducibility_z(const Subshift& x, const FiniteSubset& delta, int budget) {
  CheckResult res;
  res.gap = delta;
  const TransferGraph& graph = x.transfer();
  if (graph.empty_language()) {
    res.verdict = CheckVerdict::certified;
    res.detail = "empty subshift; vacuously certified";
    return res;
  }

  // cache globally admissible words by length
  std::vector<std::vector<std::vector<std::uint8_t>>> words(static_cast<std::size_t>(budget) + 1);
  for (int len = 1; len <= budget; ++len)
    graph.enumerate_words(static_cast<std::size_t>(len), 1u << 22,
                          [&](const std::uint8_t* w, std::size_t l) {
                            words[static_cast<std::size_t>(len)].emplace_back(w, w + l);
                          });

  bool any_arrangement = false;
  for (std::int64_t s1 = 0; s1 < budget; ++s1)
    for (std::int64_t l1 = 1; s1 + l1 <= budget; ++l1)
      for (std::int64_t s2 = 0; s2 < budget; ++s2)
        for (std::int64_t l2 = 1; s2 + l2 <= budget; ++l2) {
          if (std::min(s1, s2) != 0) continue;  // quotient by translation
          auto a1d = translate_set_z(delta, s1, s1 + l1);
          bool disjoint = true;
          for (std::int64_t a = s2; a < s2 + l2 && disjoint; ++a) disjoint = !a1d.count(a);
          if (!disjoint) continue;
          any_arrangement = true;

          std::int64_t lo = std::min(s1, s2);
          std::int64_t hi = std::max(s1 + l1, s2 + l2);
          for (const auto& w1 : words[static_cast<std::size_t>(l1)])
            for (const auto& w2 : words[static_cast<std::size_t>(l2)]) {
              std::vector<std::uint8_t> cells(static_cast<std::size_t>(hi - lo), kFree);
              for (std::int64_t i = 0; i < l1; ++i)
                cells[static_cast<std::size_t>(s1 + i - lo)] = w1[static_cast<std::size_t>(i)];
              bool clash = false;
              for (std::int64_t i = 0; i < l2 && !clash; ++i) {
                auto& slot = cells[static_cast<std::size_t>(s2 + i - lo)];
                if (slot != kFree && slot != w2[static_cast<std::size_t>(i)]) clash = true;
                slot = w2[static_cast<std::size_t>(i)];
              }
              if (clash) continue;  // overlapping supports cannot disagree
              if (!constrained_word(graph, cells)) {
                res.verdict = CheckVerdict::refuted;
                res.witness_a = Pattern(interval_subset(x.group(), s1, s1 + l1), w1);
                res.witness_b = Pattern(interval_subset(x.group(), s2, s2 + l2), w2);
                res.detail = "no common extension for patterns at [" + std::to_string(s1) + "," +
                             std::to_string(s1 + l1) + ") and [" + std::to_string(s2) + "," +
                             std::to_string(s2 + l2) + ")";
                return res;
              }
            }
        }
  if (!any_arrangement) {
    res.verdict = CheckVerdict::inconclusive;
    res.detail = "no support pair with the required gap fits the budget window";
    return res;
  }
  res.verdict = CheckVerdict::certified;
  return res;
}

CheckResult strong_irreducibility_grid(const Subshift& x, const FiniteSubset& delta, int budget,
                                       int margin) {
  CheckResult res;
  res.gap = delta;
  res.margin = margin;

  // cache margin-admissible patterns per box shape
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::vector<std::uint8_t>>> cache;
  auto patterns_for = [&](std::int64_t a, std::int64_t b) -> const std::vector<std::vector<std::uint8_t>>& {
    auto key = std::make_pair(a, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<std::uint8_t>> pats;
    grid::enumerate_box_with_margin(x, {a, b}, margin, 1u << 22,
                                    [&](const std::vector<std::uint8_t>& cells) { pats.push_back(cells); });
    return cache.emplace(key, std::move(pats)).first->second;
  };

  std::set<std::array<std::int64_t, 2>> delta_set;
  for (const auto& d : delta.elements()) delta_set.insert({d.word[0], d.word[1]});

  bool any_arrangement = false;
  // sub-boxes of [0,budget)^2: anchor (p,q), dims (a,b)
  for (std::int64_t p1 = 0; p1 < budget; ++p1)
    for (std::int64_t q1 = 0; q1 < budget; ++q1)
      for (std::int64_t a1 = 1; p1 + a1 <= budget; ++a1)
        for (std::int64_t b1 = 1; q1 + b1 <= budget; ++b1)
          for (std::int64_t p2 = 0; p2 < budget; ++p2)
            for (std::int64_t q2 = 0; q2 < budget; ++q2)
              for (std::int64_t a2 = 1; p2 + a2 <= budget; ++a2)
                for (std::int64_t b2 = 1; q2 + b2 <= budget; ++b2) {
                  if (std::min(p1, p2) != 0 || std::min(q1, q2) != 0) continue;
                  // A1*Delta disjoint from A2
                  bool disjoint = true;
                  for (std::int64_t u = p1; u < p1 + a1 && disjoint; ++u)
                    for (std::int64_t v = q1; v < q1 + b1 && disjoint; ++v)
                      for (const auto& d : delta_set) {
                        std::int64_t du = u + d[0], dv = v + d[1];
                        if (du >= p2 && du < p2 + a2 && dv >= q2 && dv < q2 + b2) {
                          disjoint = false;
                          break;
                        }
                      }
                  if (!disjoint) continue;
                  any_arrangement = true;

                  std::int64_t lo0 = std::min(p1, p2), lo1 = std::min(q1, q2);
                  std::int64_t hi0 = std::max(p1 + a1, p2 + a2), hi1 = std::max(q1 + b1, q2 + b2);
                  std::vector<std::int64_t> dims = {hi0 - lo0, hi1 - lo1};
                  for (const auto& w1 : patterns_for(a1, b1))
                    for (const auto& w2 : patterns_for(a2, b2)) {
                      std::vector<std::uint8_t> cells(
                          static_cast<std::size_t>(dims[0] * dims[1]), kFree);
                      auto put = [&](std::int64_t u, std::int64_t v, std::uint8_t val) {
                        cells[static_cast<std::size_t>((u - lo0) * dims[1] + (v - lo1))] = val;
                      };
                      for (std::int64_t u = 0; u < a1; ++u)
                        for (std::int64_t v = 0; v < b1; ++v)
                          put(p1 + u, q1 + v, w1[static_cast<std::size_t>(u * b1 + v)]);
                      for (std::int64_t u = 0; u < a2; ++u)
                        for (std::int64_t v = 0; v < b2; ++v)
                          put(p2 + u, q2 + v, w2[static_cast<std::size_t>(u * b2 + v)]);
                      // joint realization inside the hull plus margin
                      std::vector<std::int64_t> big = {dims[0] + 2 * margin, dims[1] + 2 * margin};
                      std::vector<std::uint8_t> bigcells(
                          static_cast<std::size_t>(big[0] * big[1]), kFree);
                      for (std::int64_t u = 0; u < dims[0]; ++u)
                        for (std::int64_t v = 0; v < dims[1]; ++v)
                          bigcells[static_cast<std::size_t>((u + margin) * big[1] + v + margin)] =
                              cells[static_cast<std::size_t>(u * dims[1] + v)];
                      bool glued = grid::solve_box(x, big, std::move(bigcells), true, 1u << 24,
                                                   [](const std::vector<std::uint8_t>&) { return false; });
                      if (!glued) {
                        res.verdict = CheckVerdict::refuted;
                        res.witness_a = Pattern(
                            box_subset(x.group(), {p1, q1}, {p1 + a1, q1 + b1}), w1);
                        res.witness_b = Pattern(
                            box_subset(x.group(), {p2, q2}, {p2 + a2, q2 + b2}), w2);
                        res.detail = "no joint realization at margin " + std::to_string(margin);
                        return res;
                      }
                    }
                }
  if (!any_arrangement) {
    res.verdict = CheckVerdict::inconclusive;
    res.detail = "no support pair with the required gap fits the budget window";
    return res;
  }
  res.verdict = CheckVerdict::certified;
  res.detail = "verified at margin " + std::to_string(margin);
  return res;
}

CheckResult splicable_z(const Subshift& x, const FiniteSubset& delta, int budget) {
  CheckResult res;
  res.gap = delta;
  const TransferGraph& graph = x.transfer();
  if (graph.empty_language()) {
    res.verdict = CheckVerdict::certified;
    res.detail = "empty subshift; vacuously certified";
    return res;
  }
  std::int64_t m = x.memory_extent()[0];

  for (std::int64_t l = 1; l <= budget; ++l) {
    // A = [0, l); regions around it
    std::set<std::int64_t> a_delta = translate_set_z(delta, 0, l);
    std::int64_t rx_lo = *a_delta.begin(), rx_hi = *a_delta.rbegin() + 1;
    std::int64_t c_lo = -(m - 1), c_hi = l + m - 1;  // cells seen by windows meeting A
    std::int64_t r_lo = std::min(rx_lo, c_lo), r_hi = std::max(rx_hi, c_hi);
    std::size_t rlen = static_cast<std::size_t>(r_hi - r_lo);

    std::vector<std::int64_t> d_y;  // y's free-but-relevant cells
    for (std::int64_t p = r_lo; p < r_hi; ++p)
      if (!a_delta.count(p)) d_y.push_back(p);

    std::vector<std::vector<std::uint8_t>> xs;
    graph.enumerate_words(rlen, 1u << 22, [&](const std::uint8_t* w, std::size_t len) {
      xs.emplace_back(w, w + len);
    });

    std::size_t fills = 1;
    for (std::size_t i = 0; i < d_y.size(); ++i) {
      fills *= static_cast<std::size_t>(x.alphabet().size());
      if (fills > (1u << 20)) fail(ErrorCode::budget, "splice fill enumeration too large");
    }

    std::vector<std::uint8_t> tuple(x.memory_offsets().size());
    for (const auto& px : xs) {
      for (std::size_t f = 0; f < fills; ++f) {
        // y agrees with x on A*Delta minus A, takes f on the leftover cells,
        // and is free on A
        std::vector<std::uint8_t> ycells(rlen, kFree);
        for (std::int64_t p : a_delta)
          if (p < 0 || p >= l) ycells[static_cast<std::size_t>(p - r_lo)] = px[static_cast<std::size_t>(p - r_lo)];
        std::size_t rem = f;
        for (auto p : d_y) {
          ycells[static_cast<std::size_t>(p - r_lo)] =
              static_cast<std::uint8_t>(rem % static_cast<std::size_t>(x.alphabet().size()));
          rem /= static_cast<std::size_t>(x.alphabet().size());
        }
        auto py = constrained_word(graph, ycells);
        if (!py) continue;  // no such y in X
        py->resize(rlen);

        // spliced point: x on A, y elsewhere
        std::vector<std::uint8_t> z(rlen);
        for (std::int64_t p = r_lo; p < r_hi; ++p) {
          std::size_t i = static_cast<std::size_t>(p - r_lo);
          if (p >= 0 && p < l)
            z[i] = px[i];
          else if (a_delta.count(p))
            z[i] = px[i];  // y agrees with x here
          else
            z[i] = (*py)[i];
        }
        // windows meeting A
        for (std::int64_t u = -(m - 1); u < l; ++u) {
          for (std::size_t i = 0; i < x.memory_offsets().size(); ++i)
            tuple[i] = z[static_cast<std::size_t>(u + x.memory_offsets()[i][0] - r_lo)];
          if (!x.window_admissible(tuple.data())) {
            res.verdict = CheckVerdict::refuted;
            res.witness_a = Pattern(interval_subset(x.group(), r_lo, r_hi), px);
            res.witness_b = Pattern(interval_subset(x.group(), r_lo, r_hi), *py);
            res.detail = "splice along A=[0," + std::to_string(l) +
                         ") breaks the window at " + std::to_string(u);
            return res;
          }
        }
      }
    }
  }
  res.verdict = CheckVerdict::certified;
  return res;
}

CheckResult splicable_grid(const Subshift& x, const FiniteSubset& delta, int budget, int margin) {
  CheckResult res;
  res.gap = delta;
  res.margin = margin;
  std::set<std::array<std::int64_t, 2>> delta_set;
  for (const auto& d : delta.elements()) delta_set.insert({d.word[0], d.word[1]});
  const auto& extent = x.memory_extent();

  for (std::int64_t a = 1; a <= budget; ++a)
    for (std::int64_t b = 1; b <= budget; ++b) {
      // A = [0,a) x [0,b)
      std::set<std::array<std::int64_t, 2>> a_delta;
      for (std::int64_t u = 0; u < a; ++u)
        for (std::int64_t v = 0; v < b; ++v)
          for (const auto& d : delta_set) a_delta.insert({u + d[0], v + d[1]});
      std::int64_t lo0 = -(extent[0] - 1), hi0 = a + extent[0] - 1;
      std::int64_t lo1 = -(extent[1] - 1), hi1 = b + extent[1] - 1;
      for (const auto& c : a_delta) {
        lo0 = std::min(lo0, c[0]);
        hi0 = std::max(hi0, c[0] + 1);
        lo1 = std::min(lo1, c[1]);
        hi1 = std::max(hi1, c[1] + 1);
      }
      std::vector<std::int64_t> dims = {hi0 - lo0, hi1 - lo1};

      std::vector<std::array<std::int64_t, 2>> d_y;
      for (std::int64_t u = lo0; u < hi0; ++u)
        for (std::int64_t v = lo1; v < hi1; ++v)
          if (!a_delta.count({u, v})) d_y.push_back({u, v});
      std::size_t fills = 1;
      for (std::size_t i = 0; i < d_y.size(); ++i) {
        fills *= static_cast<std::size_t>(x.alphabet().size());
        if (fills > (1u << 16)) fail(ErrorCode::budget, "splice fill enumeration too large");
      }

      auto idx = [&](std::int64_t u, std::int64_t v) {
        return static_cast<std::size_t>((u - lo0) * dims[1] + (v - lo1));
      };

      std::vector<std::uint8_t> tuple(x.memory_offsets().size());
      bool failed = false;
      grid::enumerate_box_with_margin(x, dims, margin, 1u << 24, [&](const std::vector<std::uint8_t>& px) {
        if (failed) return;
        for (std::size_t f = 0; f < fills && !failed; ++f) {
          std::vector<std::uint8_t> ycells(px.size(), kFree);
          for (const auto& c : a_delta) {
            bool in_a = c[0] >= 0 && c[0] < a && c[1] >= 0 && c[1] < b;
            if (!in_a) ycells[idx(c[0], c[1])] = px[idx(c[0], c[1])];
          }
          std::size_t rem = f;
          for (const auto& c : d_y) {
            ycells[idx(c[0], c[1])] =
                static_cast<std::uint8_t>(rem % static_cast<std::size_t>(x.alphabet().size()));
            rem /= static_cast<std::size_t>(x.alphabet().size());
          }
          // does such a y exist (margin-completable)?
          std::vector<std::int64_t> big = {dims[0] + 2 * margin, dims[1] + 2 * margin};
          std::vector<std::uint8_t> bigcells(static_cast<std::size_t>(big[0] * big[1]), kFree);
          std::vector<std::uint8_t> py;
          for (std::int64_t u = 0; u < dims[0]; ++u)
            for (std::int64_t v = 0; v < dims[1]; ++v)
              bigcells[static_cast<std::size_t>((u + margin) * big[1] + v + margin)] =
                  ycells[static_cast<std::size_t>(u * dims[1] + v)];
          bool exists = grid::solve_box(x, big, std::move(bigcells), true, 1u << 24,
                                        [&](const std::vector<std::uint8_t>& full) {
                                          py.resize(px.size());
                                          for (std::int64_t u = 0; u < dims[0]; ++u)
                                            for (std::int64_t v = 0; v < dims[1]; ++v)
                                              py[static_cast<std::size_t>(u * dims[1] + v)] =
                                                  full[static_cast<std::size_t>(
                                                      (u + margin) * big[1] + v + margin)];
                                          return false;
                                        });
          if (!exists) continue;

          std::vector<std::uint8_t> z(px.size());
          for (std::int64_t u = lo0; u < hi0; ++u)
            for (std::int64_t v = lo1; v < hi1; ++v) {
              bool in_a = u >= 0 && u < a && v >= 0 && v < b;
              if (in_a || a_delta.count({u, v}))
                z[idx(u, v)] = px[idx(u, v)];
              else
                z[idx(u, v)] = py[idx(u, v)];
            }
          // windows meeting A
          for (std::int64_t u = -(extent[0] - 1); u < a && !failed; ++u)
            for (std::int64_t v = -(extent[1] - 1); v < b && !failed; ++v) {
              for (std::size_t i = 0; i < x.memory_offsets().size(); ++i)
                tuple[i] = z[idx(u + x.memory_offsets()[i][0], v + x.memory_offsets()[i][1])];
              if (!x.window_admissible(tuple.data())) {
                res.verdict = CheckVerdict::refuted;
                res.witness_a = Pattern(box_subset(x.group(), {lo0, lo1}, {hi0, hi1}), px);
                res.witness_b = Pattern(box_subset(x.group(), {lo0, lo1}, {hi0, hi1}), py);
                res.detail = "splice along A=[0," + std::to_string(a) + ")x[0," +
                             std::to_string(b) + ") breaks a window";
                failed = true;
              }
            }
        }
      });
      if (failed) return res;
    }
  res.verdict = CheckVerdict::certified;
  res.detail = "verified at margin " + std::to_string(margin);
  return res;
}

}  // namespace

CheckResult check_strong_irreducibility(const Subshift& x, const FiniteSubset& delta,
                                        int window_budget, int margin) {
  if (delta.model() != x.group()) fail(ErrorCode::model_mismatch, "gap set over wrong group");
  if (!delta.contains(x.group().identity()))
    fail(ErrorCode::invalid_argument, "gap set must contain the identity");
  if (window_budget < 1) fail(ErrorCode::invalid_argument, "window budget must be positive");
  try {
    if (x.rank() == 1) return strong_irreducibility_z(x, delta, window_budget);
    if (x.rank() == 2) return strong_irreducibility_grid(x, delta, window_budget, margin);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::budget) {
      CheckResult res;
      res.gap = delta;
      res.verdict = CheckVerdict::inconclusive;
      res.detail = std::string("budget exhausted: ") + e.what();
      return res;
    }
    throw;
  }
  fail(ErrorCode::unsupported, "strong irreducibility check supports rank 1 and 2");
}

CheckResult check_splicable(const Subshift& x, const FiniteSubset& delta, int window_budget,
                            int margin) {
  if (delta.model() != x.group()) fail(ErrorCode::model_mismatch, "gap set over wrong group");
  if (!delta.contains(x.group().identity()))
    fail(ErrorCode::invalid_argument, "gap set must contain the identity");
  if (window_budget < 1) fail(ErrorCode::invalid_argument, "window budget must be positive");
  try {
    if (x.rank() == 1) return splicable_z(x, delta, window_budget);
    if (x.rank() == 2) return splicable_grid(x, delta, window_budget, margin);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::budget) {
      CheckResult res;
      res.gap = delta;
      res.verdict = CheckVerdict::inconclusive;
      res.detail = std::string("budget exhausted: ") + e.what();
      return res;
    }
    throw;
  }
  fail(ErrorCode::unsupported, "splicability check supports rank 1 and 2");
}

}  // namespace symdyn
