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

#include "transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace symdyn {

namespace {
constexpr std::int64_t kCountCap = std::int64_t{1} << 62;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a > kCountCap - b) return kCountCap;
  return a + b;
}
}  // namespace

TransferGraph::TransferGraph(const Subshift& x) {
  if (x.rank() != 1) fail(ErrorCode::unsupported, "transfer graph needs a rank-1 subshift");
  k_ = x.alphabet().size();
  m_ = static_cast<int>(x.memory_extent()[0]);
  double bits = static_cast<double>(m_) * std::log2(static_cast<double>(k_));
  if (bits > 22) fail(ErrorCode::budget, "memory span too large for the transfer graph");
  nv_ = 1;
  for (int i = 0; i < m_ - 1; ++i) nv_ *= static_cast<std::size_t>(k_);
  tail_mod_ = m_ >= 2 ? nv_ / static_cast<std::size_t>(k_) : 1;
  if (m_ == 1) tail_mod_ = 1;

  const auto& offs = x.memory_offsets();
  window_pos_.resize(offs.size());
  for (std::size_t i = 0; i < offs.size(); ++i) window_pos_[i] = offs[i][0];
  {
    std::vector<std::uint8_t> tuple(offs.size());
    std::size_t combos = 1;
    for (std::size_t i = 0; i < offs.size(); ++i) combos *= static_cast<std::size_t>(k_);
    window_lookup_.assign(combos, 0);
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t rem = code;
      for (std::size_t i = offs.size(); i-- > 0;) {
        tuple[i] = static_cast<std::uint8_t>(rem % static_cast<std::size_t>(k_));
        rem /= static_cast<std::size_t>(k_);
      }
      window_lookup_[code] = x.window_admissible(tuple.data()) ? 1 : 0;
    }
  }

  edge_ok_.assign(nv_ * static_cast<std::size_t>(k_), 0);
  std::vector<std::uint8_t> word(static_cast<std::size_t>(m_));
  std::vector<std::uint8_t> tuple(offs.size());
  for (std::size_t v = 0; v < nv_; ++v) {
    // decode the (m-1)-prefix
    std::size_t rem = v;
    for (int i = m_ - 2; i >= 0; --i) {
      word[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rem % static_cast<std::size_t>(k_));
      rem /= static_cast<std::size_t>(k_);
    }
    for (int c = 0; c < k_; ++c) {
      word[static_cast<std::size_t>(m_ - 1)] = static_cast<std::uint8_t>(c);
      for (std::size_t i = 0; i < window_pos_.size(); ++i)
        tuple[i] = word[static_cast<std::size_t>(window_pos_[i])];
      if (window_tuple_ok(tuple.data()))
        edge_ok_[v * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)] = 1;
    }
  }
  prune();
}

bool TransferGraph::window_tuple_ok(const std::uint8_t* tuple) const {
  std::size_t code = 0;
  for (std::size_t i = 0; i < window_pos_.size(); ++i)
    code = code * static_cast<std::size_t>(k_) + tuple[i];
  return window_lookup_[code] != 0;
}

void TransferGraph::prune() {
  keep_back_.assign(nv_, 1);
  keep_fwd_.assign(nv_, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    // forward: a vertex needs one valid outgoing edge into a survivor
    for (std::size_t v = 0; v < nv_; ++v) {
      if (!keep_fwd_[v]) continue;
      bool ok = false;
      for (int c = 0; c < k_ && !ok; ++c)
        ok = edge_ok(v, c) && keep_fwd_[edge_target(v, c)];
      if (!ok) {
        keep_fwd_[v] = 0;
        changed = true;
      }
    }
  }
  changed = true;
  std::vector<char> has_in(nv_, 0);
  while (changed) {
    changed = false;
    std::fill(has_in.begin(), has_in.end(), 0);
    for (std::size_t v = 0; v < nv_; ++v) {
      if (!keep_back_[v]) continue;
      for (int c = 0; c < k_; ++c)
        if (edge_ok(v, c)) has_in[edge_target(v, c)] = 1;
    }
    for (std::size_t v = 0; v < nv_; ++v) {
      if (keep_back_[v] && !has_in[v]) {
        keep_back_[v] = 0;
        changed = true;
      }
    }
  }
  empty_ = true;
  for (std::size_t v = 0; v < nv_ && empty_; ++v)
    if (keep_back_[v] && keep_fwd_[v]) empty_ = false;
}

std::size_t TransferGraph::encode(const std::uint8_t* w, int len) const {
  std::size_t v = 0;
  for (int i = 0; i < len; ++i) v = v * static_cast<std::size_t>(k_) + w[i];
  return v;
}

bool TransferGraph::word_locally_admissible(const std::uint8_t* w, std::size_t len) const {
  if (len < static_cast<std::size_t>(m_)) return true;
  std::size_t v = encode(w, m_ - 1);
  for (std::size_t i = static_cast<std::size_t>(m_ - 1); i < len; ++i) {
    if (!edge_ok(v, w[i])) return false;
    v = edge_target(v, w[i]);
  }
  return true;
}

bool TransferGraph::word_globally_admissible(const std::uint8_t* w, std::size_t len) const {
  if (len + 1 < static_cast<std::size_t>(m_)) {
    // shorter than a vertex: some completion to an (m-1)-word must work
    std::vector<std::uint8_t> buf(w, w + len);
    buf.resize(static_cast<std::size_t>(m_ - 1));
    std::size_t free_cells = static_cast<std::size_t>(m_ - 1) - len;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < free_cells; ++i) combos *= static_cast<std::size_t>(k_);
    for (std::size_t c = 0; c < combos; ++c) {
      std::size_t rem = c;
      for (std::size_t i = 0; i < free_cells; ++i) {
        buf[len + i] = static_cast<std::uint8_t>(rem % static_cast<std::size_t>(k_));
        rem /= static_cast<std::size_t>(k_);
      }
      if (word_globally_admissible(buf.data(), buf.size())) return true;
    }
    return false;
  }
  std::size_t v = encode(w, m_ - 1);
  if (!keep_back_[v]) return false;
  for (std::size_t i = static_cast<std::size_t>(m_ - 1); i < len; ++i) {
    if (!edge_ok(v, w[i])) return false;
    v = edge_target(v, w[i]);
  }
  return keep_fwd_[v] != 0;
}

void TransferGraph::enumerate_words(
    std::size_t len, std::size_t budget,
    const std::function<void(const std::uint8_t*, std::size_t)>& cb) const {
  if (len == 0) fail(ErrorCode::invalid_argument, "word length must be positive");
  if (len + 1 < static_cast<std::size_t>(m_)) {
    // distinct prefixes of the globally admissible (m-1)-words
    std::set<std::vector<std::uint8_t>> prefixes;
    enumerate_words(static_cast<std::size_t>(m_ - 1), budget * static_cast<std::size_t>(k_) + 16,
                    [&](const std::uint8_t* w, std::size_t) {
                      prefixes.insert(std::vector<std::uint8_t>(w, w + len));
                    });
    std::size_t emitted = 0;
    for (const auto& p : prefixes) {
      if (++emitted > budget) fail(ErrorCode::budget, "pattern enumeration budget exceeded");
      cb(p.data(), p.size());
    }
    return;
  }

  std::size_t edges = len - static_cast<std::size_t>(m_ - 1);
  // can_finish[e][v]: from v, e more edges can end right-extendable
  std::vector<std::vector<char>> can_finish(edges + 1, std::vector<char>(nv_, 0));
  for (std::size_t v = 0; v < nv_; ++v) can_finish[0][v] = keep_fwd_[v];
  for (std::size_t e = 1; e <= edges; ++e)
    for (std::size_t v = 0; v < nv_; ++v) {
      char ok = 0;
      for (int c = 0; c < k_ && !ok; ++c)
        ok = edge_ok(v, c) && can_finish[e - 1][edge_target(v, c)];
      can_finish[e][v] = ok;
    }

  std::vector<std::uint8_t> word(len);
  std::size_t emitted = 0;
  auto dfs = [&](auto&& self, std::size_t v, std::size_t pos) -> void {
    if (pos == len) {
      if (++emitted > budget) fail(ErrorCode::budget, "pattern enumeration budget exceeded");
      cb(word.data(), len);
      return;
    }
    std::size_t remaining = len - pos;
    for (int c = 0; c < k_; ++c) {
      if (!edge_ok(v, c) || !can_finish[remaining - 1][edge_target(v, c)]) continue;
      word[pos] = static_cast<std::uint8_t>(c);
      self(self, edge_target(v, c), pos + 1);
    }
  };
  for (std::size_t v = 0; v < nv_; ++v) {
    if (!keep_back_[v] || !can_finish[edges][v]) continue;
    std::size_t rem = v;
    for (int i = m_ - 2; i >= 0; --i) {
      word[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rem % static_cast<std::size_t>(k_));
      rem /= static_cast<std::size_t>(k_);
    }
    dfs(dfs, v, static_cast<std::size_t>(m_ - 1));
  }
}

std::int64_t TransferGraph::count_words(std::size_t len) const {
  if (len == 0) fail(ErrorCode::invalid_argument, "word length must be positive");
  if (len + 1 < static_cast<std::size_t>(m_)) {
    std::set<std::vector<std::uint8_t>> prefixes;
    enumerate_words(static_cast<std::size_t>(m_ - 1), 1u << 22,
                    [&](const std::uint8_t* w, std::size_t) {
                      prefixes.insert(std::vector<std::uint8_t>(w, w + len));
                    });
    return static_cast<std::int64_t>(prefixes.size());
  }
  std::size_t edges = len - static_cast<std::size_t>(m_ - 1);
  std::vector<std::int64_t> ways(nv_, 0);
  for (std::size_t v = 0; v < nv_; ++v) ways[v] = keep_back_[v] ? 1 : 0;
  std::vector<std::int64_t> next(nv_, 0);
  for (std::size_t e = 0; e < edges; ++e) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t v = 0; v < nv_; ++v) {
      if (!ways[v]) continue;
      for (int c = 0; c < k_; ++c)
        if (edge_ok(v, c)) {
          auto t = edge_target(v, c);
          next[t] = sat_add(next[t], ways[v]);
        }
    }
    ways.swap(next);
  }
  std::int64_t total = 0;
  for (std::size_t v = 0; v < nv_; ++v)
    if (keep_fwd_[v]) total = sat_add(total, ways[v]);
  if (total >= kCountCap) fail(ErrorCode::budget, "word count overflows the exact counter");
  return total;
}

void TransferGraph::enumerate_cyclic(
    std::int64_t d, std::size_t budget,
    const std::function<void(const std::uint8_t*, std::size_t)>& cb) const {
  if (d < 1) fail(ErrorCode::invalid_argument, "period must be positive");
  std::vector<std::uint8_t> w(static_cast<std::size_t>(d));
  std::size_t emitted = 0;
  // windows are checked as soon as their last cell is assigned; wrapping
  // windows are resolved once the word is complete
  std::vector<std::uint8_t> tup(window_pos_.size());
  auto check_at = [&](std::int64_t u) {
    for (std::size_t i = 0; i < window_pos_.size(); ++i)
      tup[i] = w[static_cast<std::size_t>((u + window_pos_[i]) % d)];
    return window_tuple_ok(tup.data());
  };
  auto dfs = [&](auto&& self, std::int64_t pos) -> void {
    if (pos == d) {
      for (std::int64_t u = std::max<std::int64_t>(0, d - m_ + 1); u < d; ++u)
        if (!check_at(u)) return;
      if (++emitted > budget) fail(ErrorCode::budget, "periodic-point budget exceeded");
      cb(w.data(), w.size());
      return;
    }
    for (int c = 0; c < k_; ++c) {
      w[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(c);
      std::int64_t u = pos - m_ + 1;
      if (u >= 0 && !check_at(u)) continue;
      self(self, pos + 1);
    }
  };
  dfs(dfs, 0);
}

std::int64_t TransferGraph::count_cyclic(std::int64_t d) const {
  if (d < 1) fail(ErrorCode::invalid_argument, "period must be positive");
  // closed paths of length d; trace of the d-th power of the edge matrix
  std::int64_t total = 0;
  std::vector<std::int64_t> ways(nv_), next(nv_);
  for (std::size_t s = 0; s < nv_; ++s) {
    std::fill(ways.begin(), ways.end(), 0);
    ways[s] = 1;
    for (std::int64_t step = 0; step < d; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t v = 0; v < nv_; ++v) {
        if (!ways[v]) continue;
        for (int c = 0; c < k_; ++c)
          if (edge_ok(v, c)) {
            auto t = edge_target(v, c);
            next[t] = sat_add(next[t], ways[v]);
          }
      }
      ways.swap(next);
    }
    total = sat_add(total, ways[s]);
  }
  return total;
}

double TransferGraph::spectral_log(double tol) const {
  // dense adjacency with multiplicities over the essential part
  std::vector<std::size_t> verts;
  std::vector<std::size_t> index(nv_, static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < nv_; ++v)
    if (essential(v)) {
      index[v] = verts.size();
      verts.push_back(v);
    }
  std::size_t n = verts.size();
  if (n == 0) return -std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> adj(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (int c = 0; c < k_; ++c)
      if (edge_ok(verts[i], c)) {
        auto t = edge_target(verts[i], c);
        if (index[t] != static_cast<std::size_t>(-1)) adj[i][index[t]] += 1.0;
      }

  // Tarjan SCC
  std::vector<int> low(n, -1), num(n, -1), comp(n, -1);
  std::vector<std::size_t> stack;
  std::vector<char> onstack(n, 0);
  int counter = 0, ncomp = 0;
  auto strongconnect = [&](auto&& self, std::size_t v) -> void {
    num[v] = low[v] = counter++;
    stack.push_back(v);
    onstack[v] = 1;
    for (std::size_t u = 0; u < n; ++u) {
      if (adj[v][u] == 0.0) continue;
      if (num[u] < 0) {
        self(self, u);
        low[v] = std::min(low[v], low[u]);
      } else if (onstack[u]) {
        low[v] = std::min(low[v], num[u]);
      }
    }
    if (low[v] == num[v]) {
      while (true) {
        auto u = stack.back();
        stack.pop_back();
        onstack[u] = 0;
        comp[u] = ncomp;
        if (u == v) break;
      }
      ++ncomp;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (num[v] < 0) strongconnect(strongconnect, v);

  double best = -std::numeric_limits<double>::infinity();
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v)
      if (comp[v] == c) members.push_back(v);
    std::size_t sz = members.size();
    bool has_edge = false;
    for (auto a : members)
      for (auto b : members)
        if (adj[a][b] > 0) has_edge = true;
    if (!has_edge) continue;  // trivial component
    if (sz == 1) {
      best = std::max(best, std::log(adj[members[0]][members[0]]));
      continue;
    }
    // power iteration on (M + I): primitive, so the Collatz-Wielandt
    // bracket collapses geometrically
    std::vector<double> vec(sz, 1.0), next(sz, 0.0);
    double lam = 1.0;
    for (int iter = 0; iter < 200000; ++iter) {
      double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
      for (std::size_t i = 0; i < sz; ++i) {
        double s = vec[i];
        for (std::size_t j = 0; j < sz; ++j) s += adj[members[i]][members[j]] * vec[j];
        next[i] = s;
        double ratio = s / vec[i];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
      double norm = 0.0;
      for (auto x : next) norm = std::max(norm, x);
      for (std::size_t i = 0; i < sz; ++i) vec[i] = next[i] / norm;
      lam = (lo + hi) / 2;
      if (hi - lo <= tol * std::max(1.0, lam)) break;
    }
    best = std::max(best, std::log(lam - 1.0));
  }
  return best;
}

}  // namespace symdyn
