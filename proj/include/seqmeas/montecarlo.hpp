// Copyright 2026 The seqmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEQMEAS_MONTECARLO_HPP
#define SEQMEAS_MONTECARLO_HPP

#include <cstdint>

#include "seqmeas/protocol.hpp"

namespace seqmeas {

struct EmptyCellError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Knobs of one simulated coincidence run. pairs_per_config is the expected
/// number of pairs contributing to one full observable estimate (split
/// across its setting configurations). The visibilities model reduced
/// correlation contrast in the sigma_Z (x) sigma_Z and sigma_X (x) sigma_X
/// bases; 1.0 is ideal.
struct ExperimentPlan {
  double pairs_per_config = 3.0e4;
  std::uint64_t seed = 0;
  double visibility_z = 1.0;
  double visibility_x = 1.0;

  void validate() const;
};

/// Coincidence counts indexed by (Alice setting i, Bob setting j,
/// Alice outcome a, Bob outcome b); outcome index 0 means +1, 1 means -1.
struct CountTable {
  std::int64_t counts[2][2][2][2] = {};

  std::int64_t& at(int i, int j, Outcome a, Outcome b) {
    return counts[i][j][a == Outcome::plus ? 0 : 1][b == Outcome::plus ? 0 : 1];
  }
  std::int64_t at(int i, int j, Outcome a, Outcome b) const {
    return counts[i][j][a == Outcome::plus ? 0 : 1][b == Outcome::plus ? 0 : 1];
  }
  std::int64_t cell_total(int i, int j) const;
  std::int64_t total() const;
};

/// Point estimate with a propagated Poissonian standard deviation. The
/// warning flag marks estimates where some contributing count was zero, so
/// the propagated variance under-reports.
struct Estimate {
  double value = 0.0;
  double std_dev = 0.0;
  bool zero_count_warning = false;
};

/// P(a, b | i, j) when Alice performs her step measurement A_i (sharpness
/// step.mu) and Bob measures B_j, on the canonical state. Visibilities damp
/// the two-party correlation term toward the product of marginals,
/// resolved per Pauli content: Z (x) Z terms scale with visibility_z,
/// everything else with visibility_x.
double joint_probability(const StepParams& step, int alice_setting, int bob_setting,
                         Outcome a, Outcome b, const ExperimentPlan& plan);

/// P(a, b) when both sides measure the same Pauli basis projectively, as in
/// the witness estimation configurations.
double witness_joint_probability(const StepParams& step, Basis basis, Outcome a,
                                 Outcome b, const ExperimentPlan& plan);

/// Draws one CHSH count table: an independent Poisson variate per
/// (i, j, a, b) with mean pairs_per_config / 4 * P(a, b | i, j). Each cell
/// consumes its own RNG stream derived from (seed, i, j, a, b), so the
/// table is reproducible regardless of evaluation order.
CountTable simulate_counts(const StepParams& step, const ExperimentPlan& plan);

/// Draws the two witness configurations (ZZ into cell (0,0), XX into
/// cell (1,1)) with mean pairs_per_config / 2 per configuration.
CountTable simulate_witness_counts(const StepParams& step, const ExperimentPlan& plan);

/// E = (n++ + n-- - n+- - n-+) / N with first-order Poisson propagation:
/// sigma^2 = sum_ab ((ab - E) / N)^2 n_ab. Throws EmptyCellError when the
/// cell has no counts.
Estimate estimate_correlator(const CountTable& table, int i, int j);

/// S = E00 + E01 + E10 - E11, variances added.
Estimate estimate_chsh(const CountTable& table);

/// <W> = 1 - E_ZZ - E_XX from a witness count table, variances added.
Estimate estimate_witness(const CountTable& table);

/// Deterministically derives a sub-seed for a named stream; used to give
/// every branch of a simulated run its own independent cell streams.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

}  // namespace seqmeas

#endif  // SEQMEAS_MONTECARLO_HPP
