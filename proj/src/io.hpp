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

#ifndef SYMDYN_IO_HPP
#define SYMDYN_IO_HPP

#include <string>

#include "ca.hpp"
#include "subshift.hpp"

namespace symdyn {

// Line-based key-value subshift file:
//   alphabet = 01
//   group = lattice:1
//   memory = 0 1
//   admissible = 00 01 10
// Patterns list symbols at the memory coordinates in sorted (row-major)
// order. Parse errors carry line numbers.
Subshift parse_subshift_text(const std::string& text);
Subshift parse_subshift_file(const std::string& path);
std::string serialize_subshift(const Subshift& x);
void write_subshift_file(const Subshift& x, const std::string& path);

// Rule file: alphabet/group/memory headers plus one `pattern -> symbol`
// line per A^S entry.
LocalRule parse_rule_text(const std::string& text);
LocalRule parse_rule_file(const std::string& path);
std::string serialize_rule(const LocalRule& rule);
void write_rule_file(const LocalRule& rule, const std::string& path);

// Presets: "golden-mean", "weiss", "zeros", "full:SYMS[:rank]",
// "hard-ball:d=R" (rank R lattice, F = unit vectors).
Subshift subshift_preset(const std::string& name);

// Element-list specs: "0,1" / "(0,0),(1,0)" / "ball:N".
FiniteSubset parse_subset_spec(const GroupModel& g, const std::string& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace symdyn

#endif  // SYMDYN_IO_HPP
