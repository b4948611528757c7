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

#ifndef SYMDYN_GRID_HPP
#define SYMDYN_GRID_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "subshift.hpp"

namespace symdyn {
namespace grid {

constexpr std::uint8_t kFree = 0xff;

// Constrained box fill for lattice subshifts of any rank. Cells are
// row-major over [0, dims); kFree marks unassigned cells. Every memory
// window fully contained in the box is enforced. Enumerates completions
// in lexicographic order; returns false from cb to stop the search.
// first_only stops after the first completion (existence test).
bool solve_box(const Subshift& x, const std::vector<std::int64_t>& dims,
               std::vector<std::uint8_t> cells, bool first_only, std::size_t node_budget,
               const std::function<bool(const std::vector<std::uint8_t>&)>& cb);

// Fillings of the inner box [0, dims) that extend to a locally
// admissible filling of the box grown by `margin` on every side.
void enumerate_box_with_margin(const Subshift& x, const std::vector<std::int64_t>& dims, int margin,
                               std::size_t budget,
                               const std::function<void(const std::vector<std::uint8_t>&)>& cb);

// Can the partial assignment on [0, dims) be completed, allowing the
// solver to use a margin collar around it?
bool completable_with_margin(const Subshift& x, const std::vector<std::int64_t>& dims,
                             const std::vector<std::uint8_t>& cells, int margin,
                             std::size_t node_budget = 1u << 24);

// d^rank torus fillings whose every cyclic window is admissible.
void enumerate_torus(const Subshift& x, std::int64_t d, std::size_t budget,
                     const std::function<void(const std::vector<std::uint8_t>&)>& cb);

std::int64_t row_major_index(const std::vector<std::int64_t>& dims,
                             const std::vector<std::int64_t>& coords);

}  // namespace grid
}  // namespace symdyn

#endif  // SYMDYN_GRID_HPP
