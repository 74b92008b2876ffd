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

#include "seqmeas/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace seqmeas {

namespace {

constexpr double kRadToDeg = 180.0 / M_PI;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double present_angle(double x, bool degrees) { return degrees ? x * kRadToDeg : x; }

}  // namespace

std::vector<ExactRow> exact_rows(const ProtocolConfig& config) {
  std::vector<ExactRow> rows;
  for (int depth = 1; depth <= config.steps(); ++depth) {
    for (const TreeNode& node : enumerate_tree(config, depth)) {
      const StepParams& p = node.params;
      rows.push_back({depth, format_history(node.history), p.eta, p.alpha, p.beta,
                      p.theta, p.mu, chsh_closed_form(p.eta, p.mu),
                      witness_expectation(p).expectation});
    }
  }
  return rows;
}

std::vector<SimulateRow> simulate_rows(const ProtocolConfig& config,
                                       const ExperimentPlan& plan) {
  plan.validate();
  std::vector<SimulateRow> rows;
  for (int depth = 1; depth <= config.steps(); ++depth) {
    for (const TreeNode& node : enumerate_tree(config, depth)) {
      const std::string history = format_history(node.history);
      ExperimentPlan branch_plan = plan;
      branch_plan.seed =
          derive_seed(plan.seed, std::to_string(depth) + ":" + history);

      SimulateRow row;
      row.step = depth;
      row.history = history;
      if (chsh_closed_form(node.params.eta, node.params.mu) >= kChshReportThreshold) {
        const Estimate e = estimate_chsh(simulate_counts(node.params, branch_plan));
        row.quantity = "chsh";
        row.value = e.value;
        row.sd = e.std_dev;
        row.significance = (e.value - 2.0) / e.std_dev;
      } else {
        const Estimate e =
            estimate_witness(simulate_witness_counts(node.params, branch_plan));
        row.quantity = "witness";
        row.value = e.value;
        row.sd = e.std_dev;
        row.significance = -e.value / e.std_dev;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<TreeRow> tree_rows(const ProtocolConfig& config) {
  std::vector<TreeRow> rows;
  for (int depth = 1; depth <= config.steps(); ++depth) {
    for (const TreeNode& node : enumerate_tree(config, depth)) {
      const StepParams& p = node.params;
      rows.push_back({depth, format_history(node.history), node.probability, p.eta,
                      p.alpha, p.beta, p.theta, p.mu, max_sharpness(p.eta),
                      amplification_condition(p.eta, p.mu)});
    }
  }
  return rows;
}

std::string to_csv(const std::vector<ExactRow>& rows, bool degrees) {
  std::string out = "step,history,eta,alpha,beta,theta,mu,s_chsh,witness\n";
  for (const ExactRow& r : rows) {
    out += std::to_string(r.step) + "," + r.history + "," +
           fmt(present_angle(r.eta, degrees)) + "," +
           fmt(present_angle(r.alpha, degrees)) + "," +
           fmt(present_angle(r.beta, degrees)) + "," +
           fmt(present_angle(r.theta, degrees)) + "," +
           fmt(present_angle(r.mu, degrees)) + "," + fmt(r.s_chsh) + "," +
           fmt(r.witness) + "\n";
  }
  return out;
}

std::string to_csv(const std::vector<SimulateRow>& rows) {
  std::string out = "step,history,quantity,value,sd,significance\n";
  for (const SimulateRow& r : rows) {
    out += std::to_string(r.step) + "," + r.history + "," + r.quantity + "," +
           fmt(r.value) + "," + fmt(r.sd) + "," + fmt(r.significance) + "\n";
  }
  return out;
}

std::string to_csv(const std::vector<TreeRow>& rows, bool degrees) {
  std::string out =
      "step,history,probability,eta,alpha,beta,theta,mu,mu_max,amplification\n";
  for (const TreeRow& r : rows) {
    out += std::to_string(r.step) + "," + r.history + "," + fmt(r.probability) + "," +
           fmt(present_angle(r.eta, degrees)) + "," +
           fmt(present_angle(r.alpha, degrees)) + "," +
           fmt(present_angle(r.beta, degrees)) + "," +
           fmt(present_angle(r.theta, degrees)) + "," +
           fmt(present_angle(r.mu, degrees)) + "," +
           fmt(present_angle(r.mu_max, degrees)) + "," +
           (r.amplification ? "true" : "false") + "\n";
  }
  return out;
}

std::string to_json(const std::vector<ExactRow>& rows, bool degrees) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ExactRow& r : rows) {
    arr.push_back({{"step", r.step},
                   {"history", r.history},
                   {"eta", present_angle(r.eta, degrees)},
                   {"alpha", present_angle(r.alpha, degrees)},
                   {"beta", present_angle(r.beta, degrees)},
                   {"theta", present_angle(r.theta, degrees)},
                   {"mu", present_angle(r.mu, degrees)},
                   {"s_chsh", r.s_chsh},
                   {"witness", r.witness}});
  }
  return arr.dump(2) + "\n";
}

std::string to_json(const std::vector<SimulateRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SimulateRow& r : rows) {
    arr.push_back({{"step", r.step},
                   {"history", r.history},
                   {"quantity", r.quantity},
                   {"value", r.value},
                   {"sd", r.sd},
                   {"significance", r.significance}});
  }
  return arr.dump(2) + "\n";
}

std::string to_json(const std::vector<TreeRow>& rows, bool degrees) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TreeRow& r : rows) {
    arr.push_back({{"step", r.step},
                   {"history", r.history},
                   {"probability", r.probability},
                   {"eta", present_angle(r.eta, degrees)},
                   {"alpha", present_angle(r.alpha, degrees)},
                   {"beta", present_angle(r.beta, degrees)},
                   {"theta", present_angle(r.theta, degrees)},
                   {"mu", present_angle(r.mu, degrees)},
                   {"mu_max", present_angle(r.mu_max, degrees)},
                   {"amplification", r.amplification}});
  }
  return arr.dump(2) + "\n";
}

double round_half_away(double x, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(x * scale) / scale;
}

}  // namespace seqmeas
