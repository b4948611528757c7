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

#include "config.hpp"

#include <algorithm>
#include <numeric>

namespace symdyn {

namespace {

std::int64_t iabs64(std::int64_t v) { return v < 0 ? -v : v; }

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Smallest p dividing |w| such that w is p-periodic.
std::size_t primitive_period(const std::vector<std::uint8_t>& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return w.size();
}

std::vector<std::uint8_t> rotate_right_word(std::vector<std::uint8_t> w) {
  if (w.size() > 1) std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
  return w;
}

std::vector<std::uint8_t> rotate_left_word(std::vector<std::uint8_t> w) {
  if (w.size() > 1) std::rotate(w.begin(), w.begin() + 1, w.end());
  return w;
}

// w rotated so that w'[j] = w[(j - t) mod |w|].
std::vector<std::uint8_t> rotate_word(const std::vector<std::uint8_t>& w, std::int64_t t) {
  std::int64_t n = static_cast<std::int64_t>(w.size());
  std::vector<std::uint8_t> out(w.size());
  for (std::int64_t j = 0; j < n; ++j)
    out[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(floor_mod(j - t, n))];
  return out;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) fail(ErrorCode::invalid_argument, "alphabet must be nonempty");
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    for (std::size_t j = i + 1; j < symbols_.size(); ++j)
      if (symbols_[i] == symbols_[j]) fail(ErrorCode::invalid_argument, "alphabet symbols must be distinct");
}

int Alphabet::index(char c) const {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos)
    fail(ErrorCode::parse, std::string("symbol '") + c + "' not in alphabet '" + symbols_ + "'");
  return static_cast<int>(pos);
}

Configuration Configuration::periodic_z(const Alphabet& a, std::vector<std::uint8_t> word) {
  if (word.empty()) fail(ErrorCode::invalid_argument, "periodic word must be nonempty");
  Configuration c(a, GroupModel::lattice(1));
  for (auto v : word)
    if (v >= a.size()) fail(ErrorCode::invalid_argument, "symbol index out of range");
  c.left_ = word;
  c.right_ = std::move(word);
  c.mid_lo_ = 0;
  c.normalize_z();
  return c;
}

Configuration Configuration::bi_tail(const Alphabet& a, std::vector<std::uint8_t> left,
                                     std::int64_t mid_lo, std::vector<std::uint8_t> mid,
                                     std::vector<std::uint8_t> right) {
  if (left.empty() || right.empty()) fail(ErrorCode::invalid_argument, "tail words must be nonempty");
  Configuration c(a, GroupModel::lattice(1));
  for (auto v : left)
    if (v >= a.size()) fail(ErrorCode::invalid_argument, "symbol index out of range");
  for (auto v : mid)
    if (v >= a.size()) fail(ErrorCode::invalid_argument, "symbol index out of range");
  for (auto v : right)
    if (v >= a.size()) fail(ErrorCode::invalid_argument, "symbol index out of range");
  c.left_ = std::move(left);
  c.mid_ = std::move(mid);
  c.right_ = std::move(right);
  c.mid_lo_ = mid_lo;
  c.normalize_z();
  return c;
}

Configuration Configuration::periodic_lattice(const Alphabet& a, std::vector<std::int64_t> periods,
                                              std::vector<std::uint8_t> data) {
  int rank = static_cast<int>(periods.size());
  if (rank == 1) return periodic_z(a, std::move(data));
  Configuration c(a, GroupModel::lattice(rank));
  std::int64_t cells = 1;
  for (auto p : periods) {
    if (p < 1) fail(ErrorCode::invalid_argument, "periods must be positive");
    cells *= p;
  }
  if (static_cast<std::int64_t>(data.size()) != cells)
    fail(ErrorCode::invalid_argument, "torus data size does not match periods");
  for (auto v : data)
    if (v >= a.size()) fail(ErrorCode::invalid_argument, "symbol index out of range");
  c.periods_ = std::move(periods);
  c.base_ = std::move(data);
  c.normalize_lattice();
  return c;
}

Configuration Configuration::with_overrides(
    const std::vector<std::pair<GroupElement, std::uint8_t>>& cells) const {
  Configuration c = *this;
  if (cells.empty()) return c;
  if (rank() == 1) {
    std::int64_t lo = mid_lo_, hi = mid_hi();
    for (const auto& [g, v] : cells) {
      model_.check_element(g);
      if (v >= alphabet_.size()) fail(ErrorCode::invalid_argument, "symbol index out of range");
      lo = std::min(lo, g.word[0]);
      hi = std::max(hi, g.word[0] + 1);
    }
    // widen the explicit middle to cover every override, then patch
    std::vector<std::uint8_t> mid;
    for (std::int64_t p = lo; p < hi; ++p) mid.push_back(value_z(p));
    for (const auto& [g, v] : cells) mid[static_cast<std::size_t>(g.word[0] - lo)] = v;
    // re-anchor tail phases at the widened boundaries
    c.left_ = rotate_word(left_, floor_mod(mid_lo_ - lo, static_cast<std::int64_t>(left_.size())));
    c.right_ = rotate_word(right_, floor_mod(mid_hi() - hi, static_cast<std::int64_t>(right_.size())));
    c.mid_ = std::move(mid);
    c.mid_lo_ = lo;
    c.normalize_z();
    return c;
  }
  for (const auto& [g, v] : cells) {
    model_.check_element(g);
    if (v >= alphabet_.size()) fail(ErrorCode::invalid_argument, "symbol index out of range");
    c.overrides_[g.word] = v;
  }
  c.normalize_lattice();
  return c;
}

std::uint8_t Configuration::value_z(std::int64_t p) const {
  if (p < mid_lo_)
    return left_[static_cast<std::size_t>(floor_mod(p - mid_lo_, static_cast<std::int64_t>(left_.size())))];
  std::int64_t off = p - mid_lo_;
  if (off < static_cast<std::int64_t>(mid_.size())) return mid_[static_cast<std::size_t>(off)];
  return right_[static_cast<std::size_t>(
      floor_mod(p - mid_hi(), static_cast<std::int64_t>(right_.size())))];
}

std::uint8_t Configuration::background_value(const std::vector<std::int64_t>& coords) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < periods_.size(); ++i)
    idx = idx * static_cast<std::size_t>(periods_[i]) +
          static_cast<std::size_t>(floor_mod(coords[i], periods_[i]));
  return base_[idx];
}

std::uint8_t Configuration::value(const GroupElement& g) const {
  if (rank() == 1) return value_z(g.word[0]);
  auto it = overrides_.find(g.word);
  if (it != overrides_.end()) return it->second;
  return background_value(g.word);
}

bool Configuration::is_periodic() const {
  if (rank() == 1) return mid_.empty() && left_ == right_ && mid_lo_ == 0;
  return overrides_.empty();
}

std::vector<std::int64_t> Configuration::periods() const {
  if (!is_periodic()) fail(ErrorCode::invalid_argument, "configuration is not fully periodic");
  if (rank() == 1) return {static_cast<std::int64_t>(right_.size())};
  return periods_;
}

void Configuration::normalize_z() {
  // primitive tail words, phases kept anchored at the middle boundaries
  std::size_t pl = primitive_period(left_);
  if (pl < left_.size())
    left_ = std::vector<std::uint8_t>(left_.end() - static_cast<std::ptrdiff_t>(pl), left_.end());
  std::size_t pr = primitive_period(right_);
  if (pr < right_.size()) right_.resize(pr);

  // absorb middle cells that already follow a tail
  bool changed = true;
  while (changed && !mid_.empty()) {
    changed = false;
    if (mid_.back() == right_.back()) {
      mid_.pop_back();
      right_ = rotate_right_word(right_);
      changed = true;
      continue;
    }
    if (mid_.front() == left_.front()) {
      mid_.erase(mid_.begin());
      mid_lo_ += 1;
      left_ = rotate_left_word(left_);
      changed = true;
    }
  }
  if (!mid_.empty()) return;

  // empty middle: either one periodic point or two tails glued at mid_lo_
  std::int64_t l = static_cast<std::int64_t>(left_.size());
  std::int64_t r = static_cast<std::int64_t>(right_.size());
  if (l == r && left_ == right_) {
    // fully periodic: re-anchor the word at the origin
    std::vector<std::uint8_t> w(static_cast<std::size_t>(r));
    for (std::int64_t j = 0; j < r; ++j)
      w[static_cast<std::size_t>(j)] = right_[static_cast<std::size_t>(floor_mod(j - mid_lo_, r))];
    left_ = w;
    right_ = std::move(w);
    mid_lo_ = 0;
    return;
  }
  // push the glue point left to the minimal start of the right-periodic
  // region; Fine-Wilf caps the number of moves for a non-periodic point
  std::int64_t cap = lcm64(l, r) + l + r + 2;
  while (cap-- > 0 && left_.back() == right_.back()) {
    mid_lo_ -= 1;
    right_ = rotate_right_word(right_);
    left_ = rotate_right_word(left_);
  }
  if (cap < 0) fail(ErrorCode::internal, "tail normalization failed to terminate");
}

void Configuration::normalize_lattice() {
  for (auto it = overrides_.begin(); it != overrides_.end();) {
    if (it->second == background_value(it->first))
      it = overrides_.erase(it);
    else
      ++it;
  }
}

std::string Configuration::str() const {
  std::string s;
  if (rank() == 1) {
    auto word_str = [&](const std::vector<std::uint8_t>& w) {
      std::string t;
      for (auto v : w) t += alphabet_.symbol(v);
      return t;
    };
    if (is_periodic()) return "per(" + word_str(right_) + ")";
    return "tails(left=" + word_str(left_) + ",mid@" + std::to_string(mid_lo_) + "=" +
           (mid_.empty() ? std::string("-") : word_str(mid_)) + ",right=" + word_str(right_) + ")";
  }
  s = "torus(";
  for (std::size_t i = 0; i < periods_.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(periods_[i]);
  }
  s += ";";
  for (auto v : base_) s += alphabet_.symbol(v);
  if (!overrides_.empty()) {
    s += ";ov=";
    for (const auto& [k, v] : overrides_) {
      s += "(";
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
      }
      s += ")->";
      s += alphabet_.symbol(v);
    }
  }
  return s + ")";
}

std::size_t Configuration::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  mix(static_cast<std::size_t>(rank()));
  if (rank() == 1) {
    mix(static_cast<std::size_t>(mid_lo_));
    for (auto v : left_) mix(v + 17);
    mix(0xabc);
    for (auto v : mid_) mix(v + 17);
    mix(0xdef);
    for (auto v : right_) mix(v + 17);
  } else {
    for (auto p : periods_) mix(static_cast<std::size_t>(p));
    for (auto v : base_) mix(v + 17);
    for (const auto& [k, v] : overrides_) {
      for (auto c : k) mix(static_cast<std::size_t>(c) * 31 + 7);
      mix(v + 17);
    }
  }
  return h;
}

bool operator==(const Configuration& a, const Configuration& b) {
  if (a.alphabet_ != b.alphabet_ || a.model_ != b.model_) return false;
  if (a.rank() == 1)
    return a.mid_lo_ == b.mid_lo_ && a.left_ == b.left_ && a.mid_ == b.mid_ && a.right_ == b.right_;
  // overrides record eventual deviations, which are canonical across
  // representations; backgrounds are compared on the lcm torus
  if (a.overrides_ != b.overrides_) return false;
  if (a.periods_ == b.periods_) return a.base_ == b.base_;
  std::vector<std::int64_t> lcms(a.periods_.size());
  for (std::size_t i = 0; i < lcms.size(); ++i) lcms[i] = lcm64(a.periods_[i], b.periods_[i]);
  std::vector<std::int64_t> coords(lcms.size(), 0);
  while (true) {
    if (a.background_value(coords) != b.background_value(coords)) return false;
    std::size_t axis = lcms.size();
    while (axis > 0) {
      --axis;
      if (++coords[axis] < lcms[axis]) break;
      coords[axis] = 0;
      if (axis == 0) return true;
    }
  }
}

Configuration shift_apply(const GroupElement& g, const Configuration& x) {
  x.group().check_element(g);
  if (x.rank() == 1) {
    std::int64_t s = g.word[0];
    if (x.is_periodic()) {
      std::int64_t r = static_cast<std::int64_t>(x.right_word().size());
      std::vector<std::uint8_t> w(static_cast<std::size_t>(r));
      // (g x)(p) = x(p - s)
      for (std::int64_t j = 0; j < r; ++j)
        w[static_cast<std::size_t>(j)] = x.right_word()[static_cast<std::size_t>(floor_mod(j - s, r))];
      return Configuration::periodic_z(x.alphabet(), std::move(w));
    }
    return Configuration::bi_tail(x.alphabet(), x.left_word(), x.mid_lo() + s, x.mid_segment(),
                                  x.right_word());
  }
  const auto& periods = x.torus_periods();
  std::int64_t cells = 1;
  for (auto p : periods) cells *= p;
  std::vector<std::uint8_t> data(static_cast<std::size_t>(cells));
  std::vector<std::int64_t> coords(periods.size(), 0);
  std::vector<std::int64_t> src(periods.size());
  for (std::int64_t idx = 0; idx < cells; ++idx) {
    for (std::size_t i = 0; i < coords.size(); ++i) src[i] = coords[i] - g.word[i];
    data[static_cast<std::size_t>(idx)] = x.background_at(src);
    // row-major: last axis fastest, matching background_value's indexing
    std::size_t axis = coords.size();
    while (axis > 0) {
      --axis;
      if (++coords[axis] < periods[axis]) break;
      coords[axis] = 0;
    }
  }
  Configuration out = Configuration::periodic_lattice(x.alphabet(), periods, std::move(data));
  if (!x.overrides().empty()) {
    std::vector<std::pair<GroupElement, std::uint8_t>> moved;
    for (const auto& [k, v] : x.overrides()) {
      std::vector<std::int64_t> nk(k.size());
      for (std::size_t i = 0; i < k.size(); ++i) nk[i] = k[i] + g.word[i];
      moved.push_back({GroupElement{nk}, v});
    }
    out = out.with_overrides(moved);
  }
  return out;
}

namespace {

// Smallest r >= 0 with x(cx + h) != y(cy + h) for some |h| = r, or -1 if
// the points agree within the safe bound (hence everywhere).
std::int64_t first_disagreement_z(const Configuration& x, const Configuration& y, std::int64_t cx,
                                  std::int64_t cy) {
  std::int64_t irregular =
      std::max({iabs64(x.mid_lo() - cx), iabs64(x.mid_hi() - cx),
                iabs64(y.mid_lo() - cy), iabs64(y.mid_hi() - cy)});
  std::int64_t lcm_l = lcm64(static_cast<std::int64_t>(x.left_word().size()),
                             static_cast<std::int64_t>(y.left_word().size()));
  std::int64_t lcm_r = lcm64(static_cast<std::int64_t>(x.right_word().size()),
                             static_cast<std::int64_t>(y.right_word().size()));
  std::int64_t bound = irregular + std::max(lcm_l, lcm_r) + 2;
  for (std::int64_t r = 0; r <= bound; ++r) {
    if (x.value_z(cx + r) != y.value_z(cy + r)) return r;
    if (r > 0 && x.value_z(cx - r) != y.value_z(cy - r)) return r;
  }
  return -1;
}

std::int64_t first_disagreement_lattice(const Configuration& x, const Configuration& y,
                                        const std::vector<std::int64_t>& cx,
                                        const std::vector<std::int64_t>& cy) {
  std::size_t rk = cx.size();
  std::int64_t irregular = 0;
  for (const auto& [k, v] : x.overrides())
    for (std::size_t i = 0; i < rk; ++i) irregular = std::max(irregular, iabs64(k[i] - cx[i]));
  for (const auto& [k, v] : y.overrides())
    for (std::size_t i = 0; i < rk; ++i) irregular = std::max(irregular, iabs64(k[i] - cy[i]));
  std::int64_t lcm_max = 1;
  for (std::size_t i = 0; i < rk; ++i)
    lcm_max = std::max(lcm_max, lcm64(x.torus_periods()[i], y.torus_periods()[i]));
  std::int64_t bound = irregular + lcm_max + 2;

  std::vector<std::int64_t> px(rk), py(rk);
  std::vector<std::int64_t> h(rk);
  auto differs_on_shell = [&](std::int64_t r) {
    std::fill(h.begin(), h.end(), -r);
    while (true) {
      std::int64_t norm = 0;
      for (auto c : h) norm = std::max(norm, iabs64(c));
      if (norm == r) {
        for (std::size_t i = 0; i < rk; ++i) {
          px[i] = cx[i] + h[i];
          py[i] = cy[i] + h[i];
        }
        if (x.value(GroupElement{px}) != y.value(GroupElement{py})) return true;
      }
      std::size_t axis = rk;
      bool done = true;
      while (axis > 0) {
        --axis;
        if (++h[axis] <= r) {
          done = false;
          break;
        }
        h[axis] = -r;
      }
      if (done) return false;
    }
  };
  for (std::int64_t r = 0; r <= bound; ++r)
    if (differs_on_shell(r)) return r;
  return -1;
}

Dyadic distance_centered(const Configuration& x, const Configuration& y, const GroupElement& center) {
  if (x.alphabet() != y.alphabet() || x.group() != y.group())
    fail(ErrorCode::model_mismatch, "distance between incompatible configurations");
  std::int64_t r;
  if (x.rank() == 1)
    r = first_disagreement_z(x, y, center.word[0], center.word[0]);
  else
    r = first_disagreement_lattice(x, y, center.word, center.word);
  if (r < 0) return Dyadic::zero_value();
  // a disagreement on the shell |h| = r means agreement holds exactly on
  // Omega_r = {|h| <= r - 1}: n(x, y) = r
  return Dyadic::pow2(static_cast<std::uint32_t>(r));
}

}  // namespace

Dyadic config_distance(const Configuration& x, const Configuration& y) {
  return distance_centered(x, y, x.group().identity());
}

Dyadic config_distance_shifted(const Configuration& x, const Configuration& y,
                               const GroupElement& g) {
  // (g x)(h) = x(h - g): (gx, gy) disagree at h iff (x, y) disagree at
  // h - g, so scan shells centered at -g.
  return distance_centered(x, y, x.group().inverse(g));
}

Dyadic config_distance_offset_z(const Configuration& x, const Configuration& y, std::int64_t s) {
  if (x.alphabet() != y.alphabet() || x.group() != y.group() || x.rank() != 1)
    fail(ErrorCode::model_mismatch, "offset distance needs matching rank-1 configurations");
  std::int64_t r = first_disagreement_z(x, y, 0, -s);
  if (r < 0) return Dyadic::zero_value();
  return Dyadic::pow2(static_cast<std::uint32_t>(r));
}

Dyadic config_distance_offset(const Configuration& x, const Configuration& y,
                              const GroupElement& s) {
  if (x.alphabet() != y.alphabet() || x.group() != y.group())
    fail(ErrorCode::model_mismatch, "offset distance between incompatible configurations");
  if (x.rank() == 1) return config_distance_offset_z(x, y, s.word[0]);
  std::vector<std::int64_t> cx(s.word.size(), 0), cy(s.word.size());
  for (std::size_t i = 0; i < s.word.size(); ++i) cy[i] = -s.word[i];
  std::int64_t r = first_disagreement_lattice(x, y, cx, cy);
  if (r < 0) return Dyadic::zero_value();
  return Dyadic::pow2(static_cast<std::uint32_t>(r));
}

Dyadic orbit_distance(const FiniteSubset& a, const Configuration& x, const Configuration& y) {
  if (a.empty_set()) fail(ErrorCode::invalid_argument, "orbit distance needs nonempty A");
  if (a.model() != x.group()) fail(ErrorCode::model_mismatch, "orbit set over wrong group");
  Dyadic best = Dyadic::zero_value();
  for (const auto& g : a.elements()) best = Dyadic::max(best, config_distance_shifted(x, y, g));
  return best;
}

}  // namespace symdyn
