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

#include "seqmeas/protocol.hpp"

#include <cmath>
#include <string>

namespace seqmeas {

namespace {

constexpr double kQuarterPi = M_PI / 4;
constexpr double kHalfPi = M_PI / 2;

// arccot with range (0, pi), so arccot(0) = pi/2.
double arccot(double x) { return std::atan2(1.0, x); }

double theta_for(double eta) { return arccot(std::sin(2.0 * eta)); }

}  // namespace

std::string format_history(const History& history) {
  std::string out;
  for (std::size_t i = 0; i < history.size(); ++i) {
    if (i > 0) out += "; ";
    out += history[i].outcome == Outcome::plus ? "+1|" : "-1|";
    out += static_cast<char>('0' + static_cast<int>(history[i].basis));
  }
  return out;
}

ProtocolConfig::ProtocolConfig(std::vector<double> schedule)
    : schedule_(std::move(schedule)) {
  if (schedule_.empty())
    throw InvalidScheduleError("schedule must contain at least one step");
  for (std::size_t k = 0; k < schedule_.size(); ++k) {
    const double mu = schedule_[k];
    if (!(mu >= 0.0 && mu <= kQuarterPi))
      throw InvalidSharpnessError("mu_" + std::to_string(k + 1) + " = " +
                                  std::to_string(mu) + " outside [0, pi/4]");
    if (mu == 0.0 && k + 1 < schedule_.size())
      throw InvalidScheduleError(
          "mu = 0 is sharp and may only appear at the final step (step " +
          std::to_string(k + 1) + " of " + std::to_string(schedule_.size()) + ")");
  }
}

StepParams initial_params(double mu_1) {
  if (!(mu_1 >= 0.0 && mu_1 <= kQuarterPi))
    throw InvalidSharpnessError("mu_1 = " + std::to_string(mu_1) +
                                " outside [0, pi/4]");
  return {kQuarterPi, 0.0, 0.0, theta_for(kQuarterPi), mu_1};
}

StepParams update_params(const StepParams& prev, HistoryEntry entry, double next_mu) {
  if (!(next_mu >= 0.0 && next_mu <= kQuarterPi))
    throw InvalidSharpnessError("next_mu = " + std::to_string(next_mu) +
                                " outside [0, pi/4]");
  if (prev.eta <= 0.0)
    throw DegenerateStateError("update_params: state is already separable (eta = 0)");

  const double eta = prev.eta;
  const double mu = prev.mu;
  double alpha = 0.0;
  double beta = 0.0;
  double eta_next = 0.0;

  if (entry.basis == Basis::z) {
    if (entry.outcome == Outcome::plus) {
      eta_next = std::atan(std::tan(mu) * std::tan(eta));
    } else {
      alpha = kHalfPi;
      beta = kHalfPi;
      eta_next = std::atan2(std::tan(mu), std::tan(eta));
      if (eta_next > kQuarterPi) {
        // mu > eta: the table formula lands past pi/4; the same state in
        // canonical form has eta' = pi/2 - eta' with both rotations advanced
        // by a quarter turn.
        eta_next = kHalfPi - eta_next;
        alpha = wrap_half_pi(alpha + kHalfPi);
        beta = wrap_half_pi(beta + kHalfPi);
      }
    }
  } else {
    const double sign = entry.outcome == Outcome::plus ? 1.0 : -1.0;
    // atan2 forms of arccot(tan 2mu cos 2eta) and arctan(tan 2eta cos 2mu);
    // these stay finite at mu = pi/4 and eta = pi/4 where tan diverges.
    alpha = sign * 0.5 *
            std::atan2(std::cos(2.0 * mu), std::sin(2.0 * mu) * std::cos(2.0 * eta));
    beta = sign * 0.5 *
           std::atan2(std::sin(2.0 * eta) * std::cos(2.0 * mu), std::cos(2.0 * eta));
    eta_next = 0.5 * std::asin(std::sin(2.0 * mu) * std::sin(2.0 * eta));
  }

  return {eta_next, alpha, beta, theta_for(eta_next), next_mu};
}

double cumulative_beta(std::span<const StepParams> trace) {
  double total = 0.0;
  for (const StepParams& p : trace) total += p.beta;
  return total;
}

BranchResult run_branch(const ProtocolConfig& config, const History& history) {
  if (static_cast<int>(history.size()) > config.steps())
    throw HistoryTooLongError("history of length " + std::to_string(history.size()) +
                              " exceeds the " + std::to_string(config.steps()) +
                              "-step schedule");
  BranchResult out;
  out.state = bell_phi_plus();
  out.trace.push_back(initial_params(config.mu_at(1)));

  for (std::size_t k = 0; k < history.size(); ++k) {
    const StepParams current = out.trace.back();
    // Alice undoes her correction, then measures.
    out.state = tensor(rotation_y(-current.alpha), Op2::identity()) * out.state;
    const MeasurementSetting setting{history[k].basis, current.mu};
    out.probability *= outcome_probability(out.state, setting, history[k].outcome);
    out.state = apply_measurement(out.state, setting, history[k].outcome);

    const int next_step = static_cast<int>(k) + 2;
    const double next_mu = next_step <= config.steps() ? config.mu_at(next_step) : 0.0;
    out.trace.push_back(update_params(current, history[k], next_mu));
  }
  return out;
}

double branch_probability(const ProtocolConfig& config, const History& history) {
  return run_branch(config, history).probability;
}

std::vector<TreeNode> enumerate_tree(const ProtocolConfig& config, int depth) {
  if (depth < 1 || depth > config.steps())
    throw HistoryTooLongError("depth " + std::to_string(depth) +
                              " outside [1, steps]");
  std::vector<TreeNode> nodes;
  const int length = depth - 1;
  const std::size_t count = static_cast<std::size_t>(1) << (2 * length);
  nodes.reserve(count);

  History history(length);
  for (std::size_t index = 0; index < count; ++index) {
    std::size_t rest = index;
    // Most significant digit = oldest step, so rows come out table-ordered.
    for (int k = length - 1; k >= 0; --k) {
      history[k] = kEntryOrder[rest & 3];
      rest >>= 2;
    }
    BranchResult branch = run_branch(config, history);
    // Joint probability of the branch: Alice picks each basis uniformly at
    // random, so every recorded step contributes a further factor 1/2.
    const double choice_weight = std::pow(0.5, length);
    nodes.push_back({history, branch.trace.back(), branch.probability * choice_weight});
  }
  return nodes;
}

Op2 bob_observable(double theta, int choice) {
  const double x_sign = choice == 0 ? 1.0 : -1.0;
  return complexd(x_sign * std::cos(theta)) * pauli(PauliAxis::x) +
         complexd(std::sin(theta)) * pauli(PauliAxis::z);
}

Op2 bob_observable(const StepParams& step, int choice) {
  if (step.eta <= 0.0)
    throw DegenerateStateError("bob_observable: state is separable (eta = 0)");
  return bob_observable(step.theta, choice);
}

double max_sharpness(double eta) {
  if (eta <= 0.0)
    throw DegenerateStateError("max_sharpness: eta must be positive");
  return 0.5 * std::atan(std::sin(2.0 * eta));
}

bool amplification_condition(double eta, double mu) {
  // At mu = pi/4 the instrument is the identity and eta is unchanged, so
  // the noninteractive boundary does not amplify.
  return mu > std::atan(std::tan(eta) * std::tan(eta)) && mu < kQuarterPi;
}

}  // namespace seqmeas
