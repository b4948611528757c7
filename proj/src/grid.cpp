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

#include "grid.hpp"

#include <algorithm>

namespace symdyn {
namespace grid {

namespace {

std::int64_t cell_count(const std::vector<std::int64_t>& dims) {
  std::int64_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

// Enumerate coordinates of the box in row-major order.
std::vector<std::vector<std::int64_t>> box_coords(const std::vector<std::int64_t>& dims) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> c(dims.size(), 0);
  out.reserve(static_cast<std::size_t>(cell_count(dims)));
  while (true) {
    out.push_back(c);
    std::size_t axis = dims.size();
    bool done = true;
    while (axis > 0) {
      --axis;
      if (++c[axis] < dims[axis]) {
        done = false;
        break;
      }
      c[axis] = 0;
    }
    if (done) break;
  }
  return out;
}

}  // namespace

std::int64_t row_major_index(const std::vector<std::int64_t>& dims,
                             const std::vector<std::int64_t>& coords) {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + coords[i];
  return idx;
}

bool solve_box(const Subshift& x, const std::vector<std::int64_t>& dims,
               std::vector<std::uint8_t> cells, bool first_only, std::size_t node_budget,
               const std::function<bool(const std::vector<std::uint8_t>&)>& cb) {
  const auto& offsets = x.memory_offsets();
  const auto& extent = x.memory_extent();
  std::size_t rank = dims.size();
  std::int64_t total = cell_count(dims);
  if (static_cast<std::int64_t>(cells.size()) != total)
    fail(ErrorCode::invalid_argument, "cell buffer does not match box dimensions");

  // window anchors whose box dims + extent fit inside
  std::vector<std::int64_t> anchor_dims(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    anchor_dims[i] = dims[i] - extent[i] + 1;
    if (anchor_dims[i] <= 0) anchor_dims[i] = 0;
  }
  bool any_window = true;
  for (auto a : anchor_dims) any_window = any_window && a > 0;

  // For each cell (in fill order = row-major), the windows whose last
  // (row-major-max) cell it is; checking those as soon as the cell is
  // assigned keeps the search prefix-pruned.
  std::vector<std::vector<std::vector<std::int64_t>>> windows_by_cell(
      static_cast<std::size_t>(total));
  if (any_window) {
    for (const auto& anchor : box_coords(anchor_dims)) {
      std::int64_t last = -1;
      for (const auto& off : offsets) {
        std::vector<std::int64_t> pos(rank);
        for (std::size_t i = 0; i < rank; ++i) pos[i] = anchor[i] + off[i];
        last = std::max(last, row_major_index(dims, pos));
      }
      windows_by_cell[static_cast<std::size_t>(last)].push_back(anchor);
    }
  }

  std::vector<std::uint8_t> tuple(offsets.size());
  auto window_ok = [&](const std::vector<std::int64_t>& anchor) {
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      std::vector<std::int64_t> pos(rank);
      for (std::size_t j = 0; j < rank; ++j) pos[j] = anchor[j] + offsets[i][j];
      std::uint8_t v = cells[static_cast<std::size_t>(row_major_index(dims, pos))];
      if (v == kFree) fail(ErrorCode::internal, "window check on unassigned cell");
      tuple[i] = v;
    }
    return x.window_admissible(tuple.data());
  };

  std::size_t nodes = 0;
  int k = x.alphabet().size();
  bool keep_going = true;
  bool found = false;
  auto dfs = [&](auto&& self, std::int64_t cell) -> void {
    if (!keep_going) return;
    if (++nodes > node_budget) fail(ErrorCode::budget, "box search budget exceeded");
    if (cell == total) {
      found = true;
      if (!cb(cells)) keep_going = false;
      if (first_only) keep_going = false;
      return;
    }
    std::size_t ci = static_cast<std::size_t>(cell);
    if (cells[ci] != kFree) {
      for (const auto& anchor : windows_by_cell[ci])
        if (!window_ok(anchor)) return;
      self(self, cell + 1);
      return;
    }
    for (int c = 0; c < k && keep_going; ++c) {
      cells[ci] = static_cast<std::uint8_t>(c);
      bool ok = true;
      for (const auto& anchor : windows_by_cell[ci])
        if (!window_ok(anchor)) {
          ok = false;
          break;
        }
      if (ok) self(self, cell + 1);
    }
    cells[ci] = kFree;
  };
  dfs(dfs, 0);
  return found;
}

void enumerate_box_with_margin(const Subshift& x, const std::vector<std::int64_t>& dims, int margin,
                               std::size_t budget,
                               const std::function<void(const std::vector<std::uint8_t>&)>& cb) {
  std::size_t rank = dims.size();
  std::vector<std::int64_t> inner = dims;
  std::size_t emitted = 0;
  // enumerate inner fillings obeying fully-inner windows, then keep the
  // ones that a margin collar can complete
  std::vector<std::uint8_t> blank(static_cast<std::size_t>(cell_count(inner)), kFree);
  solve_box(x, inner, blank, false, 1u << 28, [&](const std::vector<std::uint8_t>& filled) {
    if (margin > 0) {
      if (!completable_with_margin(x, inner, filled, margin)) return true;
    }
    if (++emitted > budget) fail(ErrorCode::budget, "pattern enumeration budget exceeded");
    cb(filled);
    return true;
  });
  (void)rank;
}

bool completable_with_margin(const Subshift& x, const std::vector<std::int64_t>& dims,
                             const std::vector<std::uint8_t>& cells, int margin,
                             std::size_t node_budget) {
  std::size_t rank = dims.size();
  std::vector<std::int64_t> big(rank);
  for (std::size_t i = 0; i < rank; ++i) big[i] = dims[i] + 2 * margin;
  std::vector<std::uint8_t> bigcells(static_cast<std::size_t>(cell_count(big)), kFree);
  std::vector<std::int64_t> c(rank, 0);
  std::int64_t total = cell_count(dims);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::vector<std::int64_t> shifted(rank);
    for (std::size_t i = 0; i < rank; ++i) shifted[i] = c[i] + margin;
    bigcells[static_cast<std::size_t>(row_major_index(big, shifted))] =
        cells[static_cast<std::size_t>(idx)];
    std::size_t axis = rank;
    while (axis > 0) {
      --axis;
      if (++c[axis] < dims[axis]) break;
      c[axis] = 0;
    }
  }
  return solve_box(x, big, std::move(bigcells), true, node_budget,
                   [](const std::vector<std::uint8_t>&) { return false; });
}

void enumerate_torus(const Subshift& x, std::int64_t d, std::size_t budget,
                     const std::function<void(const std::vector<std::uint8_t>&)>& cb) {
  std::size_t rank = static_cast<std::size_t>(x.rank());
  const auto& offsets = x.memory_offsets();
  std::vector<std::int64_t> dims(rank, d);
  std::int64_t total = cell_count(dims);
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(total), 0);
  auto coords_list = box_coords(dims);

  // every translate is a window (cyclically); check a window once its
  // last unwrapped cell is filled, wrap-dependent ones at the end
  std::vector<std::vector<std::size_t>> check_after(static_cast<std::size_t>(total));
  std::vector<std::vector<std::size_t>> window_cells;  // per anchor, row-major cell ids mod d
  window_cells.reserve(coords_list.size());
  for (std::size_t a = 0; a < coords_list.size(); ++a) {
    const auto& anchor = coords_list[a];
    std::vector<std::size_t> wcells(offsets.size());
    bool wraps = false;
    std::int64_t last_plain = -1;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      std::vector<std::int64_t> pos(rank);
      bool inrange = true;
      for (std::size_t j = 0; j < rank; ++j) {
        pos[j] = anchor[j] + offsets[i][j];
        if (pos[j] >= d) inrange = false;
      }
      std::vector<std::int64_t> wrapped(rank);
      for (std::size_t j = 0; j < rank; ++j) wrapped[j] = ((pos[j] % d) + d) % d;
      wcells[i] = static_cast<std::size_t>(row_major_index(dims, wrapped));
      if (!inrange) wraps = true;
      if (inrange) last_plain = std::max(last_plain, row_major_index(dims, pos));
    }
    window_cells.push_back(std::move(wcells));
    std::size_t trigger = wraps ? static_cast<std::size_t>(total - 1)
                                : static_cast<std::size_t>(last_plain);
    check_after[trigger].push_back(a);
  }

  std::vector<std::uint8_t> tuple(offsets.size());
  auto window_ok = [&](std::size_t a) {
    for (std::size_t i = 0; i < offsets.size(); ++i) tuple[i] = cells[window_cells[a][i]];
    return x.window_admissible(tuple.data());
  };

  int k = x.alphabet().size();
  std::size_t emitted = 0;
  auto dfs = [&](auto&& self, std::int64_t cell) -> void {
    if (cell == total) {
      if (++emitted > budget) fail(ErrorCode::budget, "periodic-point budget exceeded");
      cb(cells);
      return;
    }
    std::size_t ci = static_cast<std::size_t>(cell);
    for (int c = 0; c < k; ++c) {
      cells[ci] = static_cast<std::uint8_t>(c);
      bool ok = true;
      for (auto a : check_after[ci])
        if (!window_ok(a)) {
          ok = false;
          break;
        }
      if (ok) self(self, cell + 1);
    }
  };
  dfs(dfs, 0);
}

}  // namespace grid
}  // namespace symdyn
