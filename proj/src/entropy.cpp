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

#include "entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "grid.hpp"
#include "transfer.hpp"

namespace symdyn {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

std::uint32_t ConfigDictionary::intern(const Configuration& c) {
  auto it = index_.find(c);
  if (it != index_.end()) return it->second;
  auto id = static_cast<std::uint32_t>(configs_.size());
  configs_.push_back(c);
  index_.emplace(c, id);
  return id;
}

double map_distance_2(const ConfigDictionary& dict, const Microstate& phi, const Microstate& psi) {
  if (phi.d() != psi.d()) fail(ErrorCode::invalid_argument, "microstate size mismatch");
  DyadicSquareSum sum;
  for (std::size_t a = 0; a < phi.assignment.size(); ++a)
    sum.add_square(config_distance(dict.at(phi.assignment[a]), dict.at(psi.assignment[a])));
  return std::sqrt(sum.to_double() / static_cast<double>(phi.d()));
}

double map_distance_inf(const ConfigDictionary& dict, const Microstate& phi, const Microstate& psi) {
  if (phi.d() != psi.d()) fail(ErrorCode::invalid_argument, "microstate size mismatch");
  Dyadic best = Dyadic::zero_value();
  for (std::size_t a = 0; a < phi.assignment.size(); ++a)
    best = Dyadic::max(best, config_distance(dict.at(phi.assignment[a]), dict.at(psi.assignment[a])));
  return best.to_double();
}

bool is_good_map(const ConfigDictionary& dict, const Microstate& phi, const EntropyParams& params) {
  if (params.approx == nullptr) fail(ErrorCode::invalid_argument, "missing approximation");
  if (params.f.empty_set()) fail(ErrorCode::invalid_argument, "test set F must be nonempty");
  std::int64_t d = phi.d();
  if (d != params.approx->degree())
    fail(ErrorCode::invalid_argument, "microstate degree does not match the approximation");
  if (!params.delta.is_positive()) fail(ErrorCode::invalid_argument, "delta must be positive");
  // bound = d * delta^2
  Rational bound(d * params.delta.num * params.delta.num, params.delta.den * params.delta.den);
  for (const auto& s : params.f.elements()) {
    const Permutation& sigma = params.approx->permutation(s);
    DyadicSquareSum sum;
    for (std::int64_t a = 0; a < d; ++a) {
      const Configuration& u = dict.at(phi.assignment[static_cast<std::size_t>(
          sigma[static_cast<std::size_t>(a)])]);
      const Configuration& v = dict.at(phi.assignment[static_cast<std::size_t>(a)]);
      sum.add_square(config_distance_offset(u, v, s));
    }
    if (!sum.less_than(bound)) return false;
  }
  return true;
}

Microstate periodic_lift(ConfigDictionary& dict, const Configuration& x,
                         const SoficApproximation& approx) {
  if (!x.is_periodic()) fail(ErrorCode::invalid_argument, "periodic lift needs a periodic point");
  if (x.group() != approx.group())
    fail(ErrorCode::model_mismatch, "configuration and approximation over different groups");
  std::int64_t d = approx.degree();
  Microstate phi;
  if (x.rank() == 1) {
    std::int64_t period = static_cast<std::int64_t>(x.right_word().size());
    if (d % period != 0)
      fail(ErrorCode::invalid_argument, "point period does not divide the approximation degree");
    phi.assignment.reserve(static_cast<std::size_t>(d));
    for (std::int64_t a = 0; a < d; ++a)
      phi.assignment.push_back(dict.intern(shift_apply(GroupElement{{a}}, x)));
    return phi;
  }
  // torus: degree = side^rank, row-major coordinates
  std::int64_t side = 1;
  {
    std::int64_t total = d;
    std::int64_t r = x.rank();
    side = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(total), 1.0 / r)));
    while (side > 1) {
      std::int64_t p = 1;
      for (int i = 0; i < r; ++i) p *= side;
      if (p == total) break;
      --side;
    }
    std::int64_t p = 1;
    for (int i = 0; i < r; ++i) p *= side;
    if (p != total) fail(ErrorCode::invalid_argument, "torus degree is not a perfect power");
  }
  for (auto p : x.torus_periods())
    if (side % p != 0)
      fail(ErrorCode::invalid_argument, "point period does not divide the approximation degree");
  std::size_t rk = static_cast<std::size_t>(x.rank());
  std::vector<std::int64_t> c(rk, 0);
  phi.assignment.reserve(static_cast<std::size_t>(d));
  for (std::int64_t idx = 0; idx < d; ++idx) {
    phi.assignment.push_back(dict.intern(shift_apply(GroupElement{c}, x)));
    std::size_t axis = rk;
    while (axis > 0) {
      --axis;
      if (++c[axis] < side) break;
      c[axis] = 0;
    }
  }
  return phi;
}

void MicrostateSpace::add_lift(Microstate m) {
  if (!lifts_only_ || members_.size() != lift_count_)
    fail(ErrorCode::invalid_argument, "lifts must be added before perturbed members");
  members_.push_back(std::move(m));
  ++lift_count_;
}

void MicrostateSpace::add_perturbed(Microstate m) {
  lifts_only_ = false;
  members_.push_back(std::move(m));
}

namespace {

// rho_inf(phi, psi) >= eps, with early exit on the first far coordinate.
bool separated_pair(const ConfigDictionary& dict, const Microstate& phi, const Microstate& psi,
                    const Rational& eps) {
  for (std::size_t a = 0; a < phi.assignment.size(); ++a) {
    if (phi.assignment[a] == psi.assignment[a]) continue;
    Dyadic dist = config_distance(dict.at(phi.assignment[a]), dict.at(psi.assignment[a]));
    if (dist.ge(eps)) return true;
  }
  return false;
}

}  // namespace

std::int64_t count_separated(const MicrostateSpace& space, const Rational& eps, SeparationMode mode,
                             std::size_t exact_budget) {
  const auto& members = space.members();
  if (members.empty()) return 0;
  if (space.lifts_only() && Rational(1, 1) >= eps) {
    // distinct periodic lifts sit at pairwise rho_inf distance one, so the
    // whole family is separated; spot-check a few pairs anyway
    for (std::size_t i = 0; i + 1 < std::min<std::size_t>(members.size(), 4); ++i)
      if (!separated_pair(space.dict(), members[i], members[i + 1], eps))
        fail(ErrorCode::internal, "periodic lifts closer than expected");
    return static_cast<std::int64_t>(members.size());
  }
  if (mode == SeparationMode::exact) {
    std::size_t n = members.size();
    if (n > exact_budget)
      fail(ErrorCode::budget,
           "exact separated counting over budget (" + std::to_string(n) + " members > " +
               std::to_string(exact_budget) + "); use greedy mode");
    // max independent set on the closeness graph
    std::vector<std::uint64_t> close(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!separated_pair(space.dict(), members[i], members[j], eps)) {
          close[i] |= 1ull << j;
          close[j] |= 1ull << i;
        }
    std::int64_t best = 0;
    auto rec = [&](auto&& self, std::size_t v, std::uint64_t banned, std::int64_t size) -> void {
      if (v == n) {
        best = std::max(best, size);
        return;
      }
      if (size + static_cast<std::int64_t>(n - v) <= best) return;  // bound
      if (!(banned & (1ull << v))) self(self, v + 1, banned | close[v], size + 1);
      self(self, v + 1, banned, size);
    };
    rec(rec, 0, 0, 0);
    return best;
  }
  // greedy maximal separated family (a lower bound for the maximum)
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool ok = true;
    for (auto j : kept)
      if (!separated_pair(space.dict(), members[i], members[j], eps)) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(i);
  }
  return static_cast<std::int64_t>(kept.size());
}

std::vector<std::int64_t> good_coordinate_set(const ConfigDictionary& dict, const Microstate& phi,
                                              const FiniteSubset& k, const Rational& delta,
                                              const SoficApproximation& approx) {
  EntropyParams params;
  params.f = k;
  params.delta = delta;
  params.approx = &approx;
  if (!is_good_map(dict, phi, params))
    fail(ErrorCode::domain, "microstate is not a good map for (K, delta)");
  std::int64_t d = phi.d();
  std::vector<std::int64_t> w;
  for (std::int64_t a = 0; a < d; ++a) {
    bool good = true;
    for (const auto& s : k.elements()) {
      const Permutation& sigma = approx.permutation(s);
      const Configuration& u =
          dict.at(phi.assignment[static_cast<std::size_t>(sigma[static_cast<std::size_t>(a)])]);
      const Configuration& v = dict.at(phi.assignment[static_cast<std::size_t>(a)]);
      Dyadic dist = config_distance_offset(u, v, s);
      // rho < delta^(1/2)  <=>  rho^2 < delta
      if (!dist.is_zero()) {
        Dyadic sq = Dyadic::pow2(2 * dist.n);
        if (sq.ge(delta)) {
          good = false;
          break;
        }
      }
    }
    if (good) w.push_back(a);
  }
  // Chebyshev bound |W|/d >= 1 - |K| delta, exact in integers
  // |W| * den >= d * (den - |K| num)
  std::int64_t lhs = static_cast<std::int64_t>(w.size()) * delta.den;
  std::int64_t rhs = d * (delta.den - static_cast<std::int64_t>(k.size()) * delta.num);
  if (lhs < rhs)
    fail(ErrorCode::certificate, "good-coordinate bound |W|/d >= 1 - |K|delta violated");
  return w;
}

double transfer_matrix_entropy(const Subshift& x, double tol) {
  if (x.rank() != 1) fail(ErrorCode::unsupported, "transfer-matrix entropy needs a rank-1 subshift");
  return x.transfer().spectral_log(std::min(tol, 1e-12));
}

double pattern_complexity_bound(const Subshift& x, int n, std::size_t budget, int margin) {
  if (n < 1) fail(ErrorCode::invalid_argument, "window size must be positive");
  if (x.rank() == 1) {
    auto bound_at = [&](int len) {
      std::int64_t count = x.transfer().count_words(static_cast<std::size_t>(len));
      if (count == 0) return kNegInf;
      return std::log(static_cast<double>(count)) / static_cast<double>(len);
    };
    double b = bound_at(n);
    if (n >= 2 && std::isfinite(b)) {
      double prev = bound_at(n - 1);
      if (b > prev + 1e-12)
        fail(ErrorCode::internal, "pattern complexity bound failed to decrease");
    }
    return b;
  }
  if (x.rank() != 2) fail(ErrorCode::unsupported, "pattern complexity supports rank 1 and 2");
  std::size_t count = 0;
  grid::enumerate_box_with_margin(x, {n, n}, margin, budget,
                                  [&](const std::vector<std::uint8_t>&) { ++count; });
  if (count == 0) return kNegInf;
  return std::log(static_cast<double>(count)) / static_cast<double>(n) / static_cast<double>(n);
}

MicrostateSpace build_microstate_space(const Subshift& x, std::int64_t d, const Rational& delta,
                                       const EntropyOptions& opts,
                                       const SoficApproximation& approx) {
  std::int64_t expected = count_periodic_points(x, d);
  if (expected > static_cast<std::int64_t>(opts.periodic_budget))
    fail(ErrorCode::budget, "periodic point count " + std::to_string(expected) +
                                " exceeds the budget " + std::to_string(opts.periodic_budget));
  auto points = periodic_points(x, d, opts.periodic_budget);

  EntropyParams params;
  params.f = x.group().ball(2);
  params.delta = delta;
  params.eps = opts.eps;
  params.approx = &approx;
  MicrostateSpace space((ConfigDictionary()), params);
  for (const auto& p : points) space.add_lift(periodic_lift(space.dict(), p, approx));

  // exact equivariance makes every lift a good map; sample-check it
  for (std::size_t i = 0; i < std::min<std::size_t>(space.members().size(), 2); ++i)
    if (!is_good_map(space.dict(), space.members()[i], params))
      fail(ErrorCode::internal, "periodic lift failed the good-map test");

  if (opts.perturb && !space.members().empty()) {
    std::mt19937_64 rng(opts.seed);
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& m : space.members()) seen.insert(m.assignment);
    std::size_t added = 0;
    std::size_t attempts = 64 * std::max<std::size_t>(opts.max_perturbations, 1);
    std::size_t nlifts = space.lift_count();
    for (std::size_t t = 0; t < attempts && added < opts.max_perturbations; ++t) {
      const Microstate& src =
          space.members()[std::uniform_int_distribution<std::size_t>(0, nlifts - 1)(rng)];
      Microstate cand = src;
      std::size_t coord = std::uniform_int_distribution<std::size_t>(
          0, cand.assignment.size() - 1)(rng);
      std::uint32_t repl = std::uniform_int_distribution<std::uint32_t>(
          0, static_cast<std::uint32_t>(space.dict().size() - 1))(rng);
      if (cand.assignment[coord] == repl) continue;
      cand.assignment[coord] = repl;
      if (!seen.insert(cand.assignment).second) continue;
      if (!is_good_map(space.dict(), cand, params)) continue;
      space.add_perturbed(std::move(cand));
      ++added;
    }
  }
  return space;
}

EntropyEstimate estimate_entropy(const Subshift& x,
                                 const std::vector<std::pair<std::int64_t, Rational>>& schedule,
                                 const EntropyOptions& opts) {
  if (schedule.empty()) fail(ErrorCode::invalid_argument, "schedule must be nonempty");
  if (x.rank() != 1 && x.rank() != 2)
    fail(ErrorCode::unsupported, "entropy estimation supports rank 1 and 2");
  EntropyEstimate est;
  est.lower = kNegInf;
  for (const auto& [d, delta] : schedule) {
    SoficApproximation approx = x.rank() == 1
                                    ? SoficApproximation::cyclic(d, opts.support_radius)
                                    : SoficApproximation::torus(d, 2, opts.support_radius);
    MicrostateSpace space = build_microstate_space(x, d, delta, opts, approx);
    EntropyTraceRow row;
    row.d = approx.degree();
    row.microstates = static_cast<std::int64_t>(space.members().size());
    if (space.members().empty()) {
      // mirrors N_eps = -inf on the empty map space
      row.n_eps = -1;
      row.rate = kNegInf;
    } else {
      SeparationMode mode = (space.lifts_only() || space.members().size() <= 16)
                                ? SeparationMode::exact
                                : SeparationMode::greedy;
      row.n_eps = count_separated(space, opts.eps, mode);
      row.rate = std::log(static_cast<double>(row.n_eps)) / static_cast<double>(row.d);
    }
    est.lower = std::max(est.lower, row.rate);
    est.trace.push_back(row);
  }
  if (x.rank() == 1) est.exact_oracle = transfer_matrix_entropy(x);
  est.upper_n = opts.upper_n;
  est.upper = pattern_complexity_bound(x, opts.upper_n, std::size_t{1} << 22, opts.margin);
  return est;
}

namespace {

// Y subset of X: every globally admissible Y-word passes X's window
// check (exact for rank 1).
bool contained_in_z(const Subshift& y, const Subshift& x, std::string* witness_out) {
  std::int64_t span = x.memory_extent()[0];
  const auto& graph = y.transfer();
  bool contained = true;
  std::vector<std::uint8_t> tuple(x.memory_offsets().size());
  graph.enumerate_words(static_cast<std::size_t>(span), std::size_t{1} << 22,
                        [&](const std::uint8_t* w, std::size_t) {
                          if (!contained) return;
                          for (std::size_t i = 0; i < x.memory_offsets().size(); ++i)
                            tuple[i] = w[static_cast<std::size_t>(x.memory_offsets()[i][0])];
                          if (!x.window_admissible(tuple.data())) {
                            contained = false;
                            if (witness_out) {
                              std::string s;
                              for (std::size_t i = 0; i < static_cast<std::size_t>(span); ++i)
                                s += y.alphabet().symbol(w[i]);
                              *witness_out = s;
                            }
                          }
                        });
  return contained;
}

}  // namespace

GapReport entropy_gap_experiment(const Subshift& x, const Subshift& y,
                                 const std::vector<std::pair<std::int64_t, Rational>>& schedule,
                                 double margin, const EntropyOptions& opts) {
  if (x.alphabet() != y.alphabet() || x.group() != y.group())
    fail(ErrorCode::containment, "subsystems must share alphabet and group");
  GapReport report;
  if (x.rank() == 1) {
    std::string bad;
    if (!contained_in_z(y, x, &bad))
      fail(ErrorCode::containment, "Y is not contained in X: word '" + bad + "'");
    // strictness: an X-word that is not a Y-word, pumped to a point
    bool strict = false;
    std::int64_t budget = std::max(x.memory_extent()[0], y.memory_extent()[0]) + 8;
    for (std::int64_t len = 1; len <= budget && !strict; ++len) {
      std::set<std::vector<std::uint8_t>> y_words;
      y.transfer().enumerate_words(static_cast<std::size_t>(len), std::size_t{1} << 22,
                                   [&](const std::uint8_t* w, std::size_t l) {
                                     y_words.insert(std::vector<std::uint8_t>(w, w + l));
                                   });
      x.transfer().enumerate_words(
          static_cast<std::size_t>(len), std::size_t{1} << 22,
          [&](const std::uint8_t* w, std::size_t l) {
            if (strict) return;
            std::vector<std::uint8_t> word(w, w + l);
            if (!y_words.count(word)) {
              Configuration point = configuration_through_word(x, word);
              if (!x.contains(point)) fail(ErrorCode::internal, "strictness witness escaped X");
              if (y.contains(point)) fail(ErrorCode::internal, "strictness witness lies in Y");
              report.strictness_witness = point.str();
              strict = true;
            }
          });
    }
    if (!strict)
      fail(ErrorCode::containment, "Y is not verifiably proper in X within the word budget");
  } else {
    // rank 2: conservative local containment check on a shared box
    std::vector<std::int64_t> dims = {std::max(x.memory_extent()[0], y.memory_extent()[0]),
                                      std::max(x.memory_extent()[1], y.memory_extent()[1])};
    bool contained = true;
    std::vector<std::uint8_t> xtuple(x.memory_offsets().size());
    grid::enumerate_box_with_margin(y, dims, opts.margin, std::size_t{1} << 22,
                                    [&](const std::vector<std::uint8_t>& cells) {
      for (std::size_t i = 0; i < x.memory_offsets().size(); ++i) {
        const auto& o = x.memory_offsets()[i];
        xtuple[i] = cells[static_cast<std::size_t>(o[0] * dims[1] + o[1])];
      }
      if (!x.window_admissible(xtuple.data())) contained = false;
    });
    if (!contained) fail(ErrorCode::containment, "Y is not contained in X");
    bool strict = false;
    std::vector<std::uint8_t> ytuple(y.memory_offsets().size());
    grid::enumerate_box_with_margin(x, dims, opts.margin, std::size_t{1} << 22,
                                    [&](const std::vector<std::uint8_t>& cells) {
      if (strict) return;
      for (std::size_t i = 0; i < y.memory_offsets().size(); ++i) {
        const auto& o = y.memory_offsets()[i];
        ytuple[i] = cells[static_cast<std::size_t>(o[0] * dims[1] + o[1])];
      }
      if (!y.window_admissible(ytuple.data())) strict = true;
    });
    if (!strict) fail(ErrorCode::containment, "Y is not verifiably proper in X");
  }

  report.x_estimate = estimate_entropy(x, schedule, opts);
  report.y_estimate = estimate_entropy(y, schedule, opts);
  report.lower_x = report.x_estimate.lower;
  report.upper_y = report.y_estimate.upper;
  report.gap = report.lower_x - report.upper_y;
  report.strict = report.gap > margin;
  return report;
}

}  // namespace symdyn
