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

#ifndef SYMDYN_ENTROPY_HPP
#define SYMDYN_ENTROPY_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "approx.hpp"
#include "subshift.hpp"

namespace symdyn {

// Shared dictionary of configurations indexed by microstates.
class ConfigDictionary {
 public:
  std::uint32_t intern(const Configuration& c);
  const Configuration& at(std::uint32_t i) const { return configs_[i]; }
  std::size_t size() const { return configs_.size(); }

 private:
  std::vector<Configuration> configs_;
  std::unordered_map<Configuration, std::uint32_t, ConfigurationHash> index_;
};

// phi : [d] -> X, stored as indices into a shared dictionary.
struct Microstate {
  std::vector<std::uint32_t> assignment;
  std::int64_t d() const { return static_cast<std::int64_t>(assignment.size()); }
};

struct EntropyParams {
  FiniteSubset f;               // the approximate-equivariance test set
  Rational delta{1, 1000};
  Rational eps{1, 4};
  const SoficApproximation* approx = nullptr;
};

// rho_2 and rho_inf on X^[d] (exact dyadic distances under the hood,
// converted to double only on return).
double map_distance_2(const ConfigDictionary& dict, const Microstate& phi, const Microstate& psi);
double map_distance_inf(const ConfigDictionary& dict, const Microstate& phi, const Microstate& psi);

// sum_a rho(phi(sigma_s a), s phi(a))^2 < d delta^2 for every s in F.
bool is_good_map(const ConfigDictionary& dict, const Microstate& phi, const EntropyParams& params);

// phi_x(a) = a . x for a d-periodic point and the matching cyclic/torus
// approximation; exactly equivariant.
Microstate periodic_lift(ConfigDictionary& dict, const Configuration& x,
                         const SoficApproximation& approx);

class MicrostateSpace {
 public:
  MicrostateSpace(ConfigDictionary dict, EntropyParams params)
      : dict_(std::move(dict)), params_(std::move(params)) {}

  const ConfigDictionary& dict() const { return dict_; }
  ConfigDictionary& dict() { return dict_; }
  const EntropyParams& params() const { return params_; }
  const std::vector<Microstate>& members() const { return members_; }

  // lift members are pairwise at rho_inf distance one
  bool lifts_only() const { return lifts_only_; }
  std::size_t lift_count() const { return lift_count_; }
  std::size_t perturbed_count() const { return members_.size() - lift_count_; }

  void add_lift(Microstate m);
  void add_perturbed(Microstate m);  // clears the lifts-only flag

 private:
  ConfigDictionary dict_;
  EntropyParams params_;
  std::vector<Microstate> members_;
  bool lifts_only_ = true;
  std::size_t lift_count_ = 0;
};

enum class SeparationMode { greedy, exact };

// Maximal cardinality of a (rho_inf, eps)-separated subset. Greedy gives
// a maximal (hence lower-bounding) set; exact solves max-independent-set
// on the closeness graph and requires |members| <= exact_budget.
std::int64_t count_separated(const MicrostateSpace& space, const Rational& eps, SeparationMode mode,
                             std::size_t exact_budget = 16);

// W_phi = { a : rho(phi(sigma_s a), s phi(a)) < delta^(1/2) for all s in K };
// the Chebyshev bound |W_phi|/d >= 1 - |K| delta is asserted.
std::vector<std::int64_t> good_coordinate_set(const ConfigDictionary& dict, const Microstate& phi,
                                              const FiniteSubset& k, const Rational& delta,
                                              const SoficApproximation& approx);

struct EntropyTraceRow {
  std::int64_t d = 0;            // |[d]| of the approximation
  std::int64_t microstates = 0;  // members of the space
  std::int64_t n_eps = -1;       // separated count; -1 encodes empty space
  double rate = 0;               // log(n_eps)/d, or -inf
};

struct EntropyEstimate {
  std::vector<EntropyTraceRow> trace;
  double lower = 0;                   // max over the schedule
  std::optional<double> exact_oracle; // transfer-matrix entropy, rank 1
  double upper = 0;                   // pattern complexity bound
  int upper_n = 0;
};

struct EntropyOptions {
  Rational eps{1, 4};
  bool perturb = false;
  std::uint64_t seed = 0;
  std::size_t max_perturbations = 64;
  std::size_t periodic_budget = 1u << 21;
  int upper_n = 12;       // complexity window (per axis)
  int margin = 2;         // rank-2 enumeration margin
  int support_radius = 4; // approximation support
};

// log of the Perron eigenvalue of the transfer graph (rank 1); equals
// the topological entropy of the SFT. -inf for the empty subshift.
double transfer_matrix_entropy(const Subshift& x, double tol = 1e-9);

// (1/n^rank) log |patterns on the n-box|; upper-bounds the entropy and
// is nonincreasing in n over Z (asserted).
double pattern_complexity_bound(const Subshift& x, int n, std::size_t budget = 1u << 22,
                                int margin = 2);

// Builds the cyclic/torus approximation for each (d, delta), populates
// microstates from periodic lifts (plus an optional perturbation pass),
// counts separated families and reports the best rate.
EntropyEstimate estimate_entropy(const Subshift& x,
                                 const std::vector<std::pair<std::int64_t, Rational>>& schedule,
                                 const EntropyOptions& opts = {});

// Per-d microstate space construction, exposed for the plateau and
// perturbation experiments.
MicrostateSpace build_microstate_space(const Subshift& x, std::int64_t d, const Rational& delta,
                                       const EntropyOptions& opts,
                                       const SoficApproximation& approx);

struct GapReport {
  EntropyEstimate x_estimate;
  EntropyEstimate y_estimate;
  double lower_x = 0;
  double upper_y = 0;
  double gap = 0;
  bool strict = false;
  std::string strictness_witness;
};

// Verifies Y is a proper subsystem of X (containment plus a point of X
// violating Y), estimates both sides on the same schedule and reports
// the verdict lower(X) > upper(Y) + margin.
GapReport entropy_gap_experiment(const Subshift& x, const Subshift& y,
                                 const std::vector<std::pair<std::int64_t, Rational>>& schedule,
                                 double margin = 0.0, const EntropyOptions& opts = {});

}  // namespace symdyn

#endif  // SYMDYN_ENTROPY_HPP
