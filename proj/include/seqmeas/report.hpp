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

#ifndef SEQMEAS_REPORT_HPP
#define SEQMEAS_REPORT_HPP

#include "seqmeas/analysis.hpp"
#include "seqmeas/montecarlo.hpp"

namespace seqmeas {

enum class OutputFormat { csv, json };

/// One row of `exact` output: analytic parameters and certification values
/// for the branch ending at `step`. CSV schema:
/// step,history,eta,alpha,beta,theta,mu,s_chsh,witness
struct ExactRow {
  int step = 0;
  std::string history;
  double eta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double theta = 0.0;
  double mu = 0.0;
  double s_chsh = 0.0;
  double witness = 0.0;
};

/// One row of `simulate` output. CSV schema:
/// step,history,quantity,value,sd,significance
struct SimulateRow {
  int step = 0;
  std::string history;
  std::string quantity;  // "chsh" or "witness"
  double value = 0.0;
  double sd = 0.0;
  double significance = 0.0;  // (value-2)/sd for chsh, -value/sd for witness
};

/// One row of `tree` output. CSV schema:
/// step,history,probability,eta,alpha,beta,theta,mu,mu_max,amplification
struct TreeRow {
  int step = 0;
  std::string history;
  double probability = 0.0;
  double eta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double theta = 0.0;
  double mu = 0.0;
  double mu_max = 0.0;
  bool amplification = false;
};

/// Analytic table over every branch of every step, in table order.
/// Deterministic, no RNG.
std::vector<ExactRow> exact_rows(const ProtocolConfig& config);

/// Finite-statistics estimates for every branch. Branches whose closed-form
/// CHSH value reaches 2.1 get a "chsh" row; the rest get a "witness" row.
/// Each branch draws from its own stream derived from plan.seed, so output
/// is reproducible for a fixed seed.
std::vector<SimulateRow> simulate_rows(const ProtocolConfig& config,
                                       const ExperimentPlan& plan);

/// Full protocol tree with branch probabilities and sharpness headroom.
std::vector<TreeRow> tree_rows(const ProtocolConfig& config);

/// CHSH values at or above this threshold are certified via CHSH in
/// `simulate`; below it the witness is used instead.
inline constexpr double kChshReportThreshold = 2.1;

std::string to_csv(const std::vector<ExactRow>& rows, bool degrees = false);
std::string to_csv(const std::vector<SimulateRow>& rows);
std::string to_csv(const std::vector<TreeRow>& rows, bool degrees = false);

std::string to_json(const std::vector<ExactRow>& rows, bool degrees = false);
std::string to_json(const std::vector<SimulateRow>& rows);
std::string to_json(const std::vector<TreeRow>& rows, bool degrees = false);

/// Half-away-from-zero rounding to `digits` decimals, the convention used
/// when comparing against the published two-decimal tables.
double round_half_away(double x, int digits);

}  // namespace seqmeas

#endif  // SEQMEAS_REPORT_HPP
