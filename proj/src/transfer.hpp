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

#ifndef SYMDYN_TRANSFER_HPP
#define SYMDYN_TRANSFER_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "subshift.hpp"

namespace symdyn {

// Edge graph of a rank-1 SFT. Vertices are the (m-1)-letter words over
// the alphabet (m = memory bounding span), edges the m-letter words
// whose memory window is admissible. Bi-infinite paths are exactly the
// points of X.
class TransferGraph {
 public:
  explicit TransferGraph(const Subshift& x);

  int span() const { return m_; }
  int alphabet_size() const { return k_; }
  std::size_t vertex_count() const { return nv_; }

  bool edge_ok(std::size_t vertex, int letter) const {
    return edge_ok_[vertex * static_cast<std::size_t>(k_) + static_cast<std::size_t>(letter)] != 0;
  }
  std::size_t edge_target(std::size_t vertex, int letter) const {
    // drop the oldest letter, append the new one
    if (m_ == 1) return 0;
    return (vertex % tail_mod_) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(letter);
  }

  // Vertices with arbitrarily long incoming (resp. outgoing) paths.
  bool left_extendable(std::size_t v) const { return keep_back_[v] != 0; }
  bool right_extendable(std::size_t v) const { return keep_fwd_[v] != 0; }
  bool essential(std::size_t v) const { return keep_back_[v] && keep_fwd_[v]; }
  bool empty_language() const { return empty_; }

  std::size_t encode(const std::uint8_t* w, int len) const;  // len = m-1

  bool word_locally_admissible(const std::uint8_t* w, std::size_t len) const;
  bool word_globally_admissible(const std::uint8_t* w, std::size_t len) const;

  // Globally admissible words of the given length, lexicographic order.
  void enumerate_words(std::size_t len, std::size_t budget,
                       const std::function<void(const std::uint8_t*, std::size_t)>& cb) const;
  // Count of the above; fails on overflow past the budget.
  std::int64_t count_words(std::size_t len) const;

  // Cyclic words of length d whose every cyclic window is admissible.
  void enumerate_cyclic(std::int64_t d, std::size_t budget,
                        const std::function<void(const std::uint8_t*, std::size_t)>& cb) const;
  std::int64_t count_cyclic(std::int64_t d) const;

  // log of the Perron eigenvalue (max over strongly connected components,
  // certified Collatz-Wielandt bracket); -inf for the empty subshift.
  double spectral_log(double tol = 1e-12) const;

 private:
  void prune();
  bool window_tuple_ok(const std::uint8_t* tuple) const;

  int m_ = 1;
  int k_ = 2;
  std::size_t nv_ = 1;
  std::size_t tail_mod_ = 1;  // k^(m-2), used to shift vertex windows
  std::vector<char> edge_ok_;
  std::vector<char> keep_back_, keep_fwd_;
  bool empty_ = false;
  // memory window data copied from the subshift so the graph owns its checks
  std::vector<std::int64_t> window_pos_;
  std::vector<char> window_lookup_;
};

}  // namespace symdyn

#endif  // SYMDYN_TRANSFER_HPP
