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

// Brute-force reference implementations, deliberately independent of the
// library's transfer-graph machinery. They enumerate raw symbol tuples
// and decide global admissibility by pad pumping: a word extends to a
// bi-infinite point iff it extends locally by |A|^(m-1) cells on each
// side (pigeonhole on the de Bruijn windows).

#ifndef SYMDYN_TESTS_ORACLES_HPP
#define SYMDYN_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "subshift.hpp"

namespace symdyn::oracle {

using Word = std::vector<std::uint8_t>;

inline bool window_ok_at(const Subshift& x, const Word& w, std::int64_t u) {
  std::vector<std::uint8_t> tuple;
  for (const auto& off : x.memory_offsets()) {
    std::int64_t p = u + off[0];
    if (p < 0 || p >= static_cast<std::int64_t>(w.size())) return true;  // incomplete window
    tuple.push_back(w[static_cast<std::size_t>(p)]);
  }
  if (tuple.size() != x.memory_offsets().size()) return true;
  return x.window_admissible(tuple.data());
}

inline bool locally_admissible(const Subshift& x, const Word& w) {
  std::int64_t m = x.memory_extent()[0];
  for (std::int64_t u = 0; u + m <= static_cast<std::int64_t>(w.size()); ++u)
    if (!window_ok_at(x, w, u)) return false;
  return true;
}

inline void all_words(int k, std::size_t len, const std::function<void(const Word&)>& cb) {
  Word w(len, 0);
  while (true) {
    cb(w);
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (static_cast<int>(++w[i]) < k) break;
      w[i] = 0;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

// Pad length that guarantees pumping: |A|^(m-1) distinct windows.
inline std::size_t pad_length(const Subshift& x) {
  std::size_t m = static_cast<std::size_t>(x.memory_extent()[0]);
  std::size_t pad = 1;
  for (std::size_t i = 0; i + 1 < m; ++i) pad *= static_cast<std::size_t>(x.alphabet().size());
  return pad + m;
}

inline bool globally_admissible(const Subshift& x, const Word& w) {
  std::size_t pad = pad_length(x);
  bool found = false;
  all_words(x.alphabet().size(), pad, [&](const Word& left) {
    if (found) return;
    all_words(x.alphabet().size(), pad, [&](const Word& right) {
      if (found) return;
      Word full = left;
      full.insert(full.end(), w.begin(), w.end());
      full.insert(full.end(), right.begin(), right.end());
      if (locally_admissible(x, full)) found = true;
    });
  });
  return found;
}

inline std::set<Word> global_words(const Subshift& x, std::size_t len) {
  std::set<Word> out;
  all_words(x.alphabet().size(), len, [&](const Word& w) {
    if (locally_admissible(x, w) && globally_admissible(x, w)) out.insert(w);
  });
  return out;
}

// Cyclic words of length d all of whose wrapped windows are admissible.
inline std::set<Word> cyclic_words(const Subshift& x, std::int64_t d) {
  std::set<Word> out;
  all_words(x.alphabet().size(), static_cast<std::size_t>(d), [&](const Word& w) {
    for (std::int64_t u = 0; u < d; ++u) {
      std::vector<std::uint8_t> tuple;
      for (const auto& off : x.memory_offsets())
        tuple.push_back(w[static_cast<std::size_t>(((u + off[0]) % d + d) % d)]);
      if (!x.window_admissible(tuple.data())) return;
    }
    out.insert(w);
  });
  return out;
}

}  // namespace symdyn::oracle

#endif  // SYMDYN_TESTS_ORACLES_HPP
