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

#include "io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace symdyn {

namespace {

std::string trim(std::string s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  return s;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_fail(int lineno, const std::string& what) {
  fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": " + what);
}

struct KeyValues {
  std::optional<std::string> alphabet, group, memory;
  std::vector<std::pair<int, std::string>> admissible_lines;
  std::vector<std::pair<int, std::string>> rule_lines;  // "pattern -> symbol"
};

KeyValues scan_lines(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto arrow = line.find("->");
    auto eq = line.find('=');
    if (arrow != std::string::npos && (eq == std::string::npos || arrow < eq)) {
      kv.rule_lines.push_back({lineno, line});
      continue;
    }
    if (eq == std::string::npos) parse_fail(lineno, "expected 'key = value' or 'pattern -> symbol'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "alphabet")
      kv.alphabet = value;
    else if (key == "group")
      kv.group = value;
    else if (key == "memory")
      kv.memory = value;
    else if (key == "admissible")
      kv.admissible_lines.push_back({lineno, value});
    else
      parse_fail(lineno, "unknown key '" + key + "'");
  }
  return kv;
}

FiniteSubset parse_element_list(const GroupModel& g, const std::string& text, int lineno) {
  // space-separated element tokens; lattice tuples use (a,b) syntax
  std::vector<GroupElement> elems;
  for (const auto& tok : split_ws(text)) {
    try {
      elems.push_back(g.parse_element(tok));
    } catch (const Error& e) {
      if (lineno > 0) parse_fail(lineno, e.what());
      throw;
    }
  }
  if (elems.empty()) {
    if (lineno > 0) parse_fail(lineno, "empty element list");
    fail(ErrorCode::parse, "empty element list");
  }
  return FiniteSubset(g, std::move(elems));
}

}  // namespace

Subshift parse_subshift_text(const std::string& text) {
  KeyValues kv = scan_lines(text);
  if (!kv.alphabet) fail(ErrorCode::parse, "missing 'alphabet' line");
  if (!kv.group) fail(ErrorCode::parse, "missing 'group' line");
  if (!kv.memory) fail(ErrorCode::parse, "missing 'memory' line");
  Alphabet alphabet(split_ws(*kv.alphabet).size() > 1
                        ? [&] {
                            std::string s;
                            for (const auto& t : split_ws(*kv.alphabet)) {
                              if (t.size() != 1)
                                fail(ErrorCode::parse, "alphabet symbols must be single characters");
                              s += t;
                            }
                            return s;
                          }()
                        : *kv.alphabet);
  GroupModel group = GroupModel::parse(*kv.group);
  FiniteSubset memory = parse_element_list(group, *kv.memory, 0);

  std::vector<Pattern> adm;
  for (const auto& [lineno, value] : kv.admissible_lines) {
    for (const auto& tok : split_ws(value)) {
      if (tok.size() != memory.size())
        parse_fail(lineno, "pattern '" + tok + "' must list " + std::to_string(memory.size()) +
                               " symbols (row-major memory order)");
      std::vector<std::uint8_t> vals;
      for (char c : tok) {
        try {
          vals.push_back(static_cast<std::uint8_t>(alphabet.index(c)));
        } catch (const Error& e) {
          parse_fail(lineno, e.what());
        }
      }
      adm.emplace_back(memory, std::move(vals));
    }
  }
  if (adm.empty()) fail(ErrorCode::parse, "no admissible patterns given");
  return Subshift(alphabet, group, memory, std::move(adm));
}

std::string serialize_subshift(const Subshift& x) {
  std::ostringstream out;
  out << "alphabet = " << x.alphabet().symbols() << "\n";
  out << "group = " << x.group().decl() << "\n";
  out << "memory =";
  for (const auto& e : x.memory().elements()) out << " " << x.group().format(e);
  out << "\n";
  out << "admissible =";
  for (const auto& p : x.admissible()) out << " " << p.str(x.alphabet());
  out << "\n";
  return out.str();
}

LocalRule parse_rule_text(const std::string& text) {
  KeyValues kv = scan_lines(text);
  if (!kv.alphabet) fail(ErrorCode::parse, "missing 'alphabet' line");
  if (!kv.group) fail(ErrorCode::parse, "missing 'group' line");
  if (!kv.memory) fail(ErrorCode::parse, "missing 'memory' line");
  Alphabet alphabet(*kv.alphabet);
  GroupModel group = GroupModel::parse(*kv.group);
  FiniteSubset memory = parse_element_list(group, *kv.memory, 0);

  std::size_t inputs = 1;
  for (std::size_t i = 0; i < memory.size(); ++i) {
    inputs *= static_cast<std::size_t>(alphabet.size());
    if (inputs > (std::size_t{1} << 24)) fail(ErrorCode::parse, "rule table too large");
  }
  std::vector<std::uint8_t> table(inputs, 0xff);
  for (const auto& [lineno, line] : kv.rule_lines) {
    auto arrow = line.find("->");
    std::string lhs = trim(line.substr(0, arrow));
    std::string rhs = trim(line.substr(arrow + 2));
    if (lhs.size() != memory.size()) parse_fail(lineno, "pattern side must list the memory cells");
    if (rhs.size() != 1) parse_fail(lineno, "rule output must be a single symbol");
    std::size_t code = 0;
    for (char c : lhs) {
      try {
        code = code * static_cast<std::size_t>(alphabet.size()) +
               static_cast<std::size_t>(alphabet.index(c));
      } catch (const Error& e) {
        parse_fail(lineno, e.what());
      }
    }
    try {
      table[code] = static_cast<std::uint8_t>(alphabet.index(rhs[0]));
    } catch (const Error& e) {
      parse_fail(lineno, e.what());
    }
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == 0xff)
      fail(ErrorCode::parse, "rule table is missing an entry (A^S must be total)");
  return LocalRule(alphabet, group, memory, std::move(table));
}

std::string serialize_rule(const LocalRule& rule) {
  std::ostringstream out;
  out << "alphabet = " << rule.alphabet.symbols() << "\n";
  out << "group = " << rule.group.decl() << "\n";
  out << "memory =";
  for (const auto& e : rule.memory.elements()) out << " " << rule.group.format(e);
  out << "\n";
  std::size_t n = rule.memory.size();
  std::vector<int> digits(n, 0);
  for (std::size_t code = 0; code < rule.table.size(); ++code) {
    std::size_t rem = code;
    for (std::size_t i = n; i-- > 0;) {
      digits[i] = static_cast<int>(rem % static_cast<std::size_t>(rule.alphabet.size()));
      rem /= static_cast<std::size_t>(rule.alphabet.size());
    }
    for (std::size_t i = 0; i < n; ++i) out << rule.alphabet.symbol(digits[i]);
    out << " -> " << rule.alphabet.symbol(rule.table[code]) << "\n";
  }
  return out.str();
}

Subshift subshift_preset(const std::string& name) {
  if (name == "golden-mean") return golden_mean();
  if (name == "weiss") return weiss_sft();
  if (name == "zeros") return zeros_sft();
  if (name.rfind("full:", 0) == 0) {
    std::string rest = name.substr(5);
    auto colon = rest.find(':');
    std::string syms = colon == std::string::npos ? rest : rest.substr(0, colon);
    int rank = colon == std::string::npos ? 1 : std::stoi(rest.substr(colon + 1));
    return full_shift(Alphabet(syms), GroupModel::lattice(rank));
  }
  if (name.rfind("hard-ball:d=", 0) == 0) {
    int rank = std::stoi(name.substr(12));
    GroupModel g = GroupModel::lattice(rank);
    std::vector<GroupElement> units;
    for (int i = 0; i < rank; ++i) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(rank), 0);
      e[static_cast<std::size_t>(i)] = 1;
      units.push_back(GroupElement{e});
    }
    return hard_ball(g, FiniteSubset(g, units));
  }
  fail(ErrorCode::parse, "unknown preset '" + name +
                             "' (try golden-mean, weiss, zeros, full:SYMS, hard-ball:d=R)");
}

FiniteSubset parse_subset_spec(const GroupModel& g, const std::string& spec) {
  if (spec.rfind("ball:", 0) == 0) {
    int n = std::stoi(spec.substr(5));
    return g.ball(n);
  }
  // comma-separated element tokens, respecting tuple parens
  std::vector<GroupElement> elems;
  std::string cur;
  int depth = 0;
  auto flush = [&]() {
    if (!cur.empty()) {
      elems.push_back(g.parse_element(cur));
      cur.clear();
    }
  };
  for (char c : spec) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    if (c != ' ') cur += c;
  }
  flush();
  if (elems.empty()) fail(ErrorCode::parse, "empty element spec '" + spec + "'");
  return FiniteSubset(g, std::move(elems));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io, "cannot write '" + path + "'");
  out << content;
}

Subshift parse_subshift_file(const std::string& path) { return parse_subshift_text(read_file(path)); }
void write_subshift_file(const Subshift& x, const std::string& path) {
  write_file(path, serialize_subshift(x));
}
LocalRule parse_rule_file(const std::string& path) { return parse_rule_text(read_file(path)); }
void write_rule_file(const LocalRule& rule, const std::string& path) {
  write_file(path, serialize_rule(rule));
}

}  // namespace symdyn
