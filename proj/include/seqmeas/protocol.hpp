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

#ifndef SEQMEAS_PROTOCOL_HPP
#define SEQMEAS_PROTOCOL_HPP

#include <span>
#include <string>
#include <vector>

#include "seqmeas/instrument.hpp"
#include "seqmeas/qcore.hpp"

namespace seqmeas {

/// Thrown when an operation needs an entangled state but eta = 0.
struct DegenerateStateError : std::domain_error {
  using std::domain_error::domain_error;
};

struct HistoryTooLongError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a sharpness schedule places mu = 0 before the final step
/// (a sharp measurement leaves nothing to measure afterwards).
struct InvalidScheduleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One step of Alice's record: which observable she chose and what she saw.
struct HistoryEntry {
  Basis basis = Basis::z;
  Outcome outcome = Outcome::plus;
};

using History = std::vector<HistoryEntry>;

/// Branch enumeration order; matches the row order of the result tables:
/// +1|0, -1|0, +1|1, -1|1.
inline constexpr std::array<HistoryEntry, 4> kEntryOrder = {{
    {Basis::z, Outcome::plus},
    {Basis::z, Outcome::minus},
    {Basis::x, Outcome::plus},
    {Basis::x, Outcome::minus},
}};

/// Renders a history as "+1|0; -1|1" (outcome|basis, oldest first).
std::string format_history(const History& history);

/// The analytic description of the shared state at one step:
///   |psi_k> = R_y(alpha) (x) U_B [cos(eta)|00> + sin(eta)|11>],
/// where U_B is the composition of the per-step beta rotations accumulated
/// along the branch. beta stores only this step's increment, which is what
/// the result tables list; see cumulative_beta.
struct StepParams {
  double eta = 0.0;    // entanglement angle, in [0, pi/4]
  double alpha = 0.0;  // Alice's correction rotation
  double beta = 0.0;   // Bob's correction rotation, incremental
  double theta = 0.0;  // Bob's measurement angle, arccot(sin 2 eta)
  double mu = 0.0;     // sharpness assigned to this step
};

/// Validated sharpness schedule, one mu per step.
class ProtocolConfig {
 public:
  /// Throws InvalidSharpnessError for mu outside [0, pi/4] and
  /// InvalidScheduleError when mu = 0 occurs before the final step.
  explicit ProtocolConfig(std::vector<double> schedule);

  int steps() const { return static_cast<int>(schedule_.size()); }
  double mu_at(int step) const { return schedule_.at(step - 1); }  // 1-based
  const std::vector<double>& schedule() const { return schedule_; }

 private:
  std::vector<double> schedule_;
};

/// Step 1: maximally entangled state, no corrections, theta = pi/4.
StepParams initial_params(double mu_1);

/// Advances the analytic parameters by one measurement. Implements the four
/// update rows for (basis, outcome):
///   +1|0: alpha = beta = 0,        eta' = arctan(tan mu tan eta)
///   -1|0: alpha = beta = pi/2,     eta' = arctan(tan mu / tan eta)
///   +1|1: alpha = arccot(tan 2mu cos 2eta)/2,
///         beta  = arctan(tan 2eta cos 2mu)/2,
///         eta'  = arcsin(sin 2mu sin 2eta)/2
///   -1|1: same as +1|1 with alpha, beta negated.
/// The -1|0 row can push eta' past pi/4 when mu > eta; the result is then
/// folded back into [0, pi/4] (eta' -> pi/2 - eta', alpha and beta shifted by
/// pi/2), which describes the same state. Throws DegenerateStateError when
/// prev.eta = 0.
StepParams update_params(const StepParams& prev, HistoryEntry entry, double next_mu);

/// Total Bob correction angle accumulated along a params trace.
double cumulative_beta(std::span<const StepParams> trace);

struct BranchResult {
  Ket4 state;                     // joint state after the recorded history
  std::vector<StepParams> trace;  // analytic params for steps 1 .. len+1
  // Born-rule probability of the recorded outcomes, conditional on the
  // recorded basis choices.
  double probability = 1.0;
};

/// Brute-force evolution of one branch: starting from the Bell state,
/// alternately applies Alice's correction R_y(-alpha_k) and the recorded
/// measurement. The analytic trace is produced alongside; the two routes
/// must describe the same state (checked by the Schmidt oracle in tests).
BranchResult run_branch(const ProtocolConfig& config, const History& history);

double branch_probability(const ProtocolConfig& config, const History& history);

struct TreeNode {
  History history;
  StepParams params;  // parameters governing the step at `depth`
  // Joint probability of the branch with Alice's bases drawn uniformly at
  // random; sums to 1 across any depth stratum.
  double probability = 1.0;
};

/// All 4^(depth-1) branches of length depth-1, in kEntryOrder, with the
/// parameters of step `depth` and the branch probabilities.
std::vector<TreeNode> enumerate_tree(const ProtocolConfig& config, int depth);

/// Bob's observable for CHSH at a step:
///   B_0 = cos(theta) sigma_X + sin(theta) sigma_Z
///   B_1 = -cos(theta) sigma_X + sin(theta) sigma_Z.
Op2 bob_observable(double theta, int choice);
Op2 bob_observable(const StepParams& step, int choice);

/// Largest sharpness still violating CHSH: arctan(sin 2 eta) / 2.
/// Throws DegenerateStateError for eta = 0.
double max_sharpness(double eta);

/// True when a -1|0 outcome amplifies entanglement: mu > arctan(tan^2 eta).
bool amplification_condition(double eta, double mu);

}  // namespace seqmeas

#endif  // SEQMEAS_PROTOCOL_HPP
