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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqmeas/report.hpp"

namespace {

struct CommonOptions {
  std::vector<double> mu = {0.34, 0.19, 0.0};
  std::optional<int> steps;
  std::string format = "csv";
  std::string out_path;
  bool degrees = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--mu", opts.mu, "Sharpness schedule, one value per step")
      ->delimiter(',');
  cmd->add_option("--steps", opts.steps,
                  "Number of steps (must match the schedule length)");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
  cmd->add_flag("--degrees", opts.degrees, "Print angles in degrees");
}

seqmeas::ProtocolConfig make_config(const CommonOptions& opts) {
  if (opts.steps && *opts.steps != static_cast<int>(opts.mu.size()))
    throw seqmeas::InvalidScheduleError(
        "--steps " + std::to_string(*opts.steps) + " does not match the " +
        std::to_string(opts.mu.size()) + "-entry --mu schedule");
  return seqmeas::ProtocolConfig(opts.mu);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sequential unsharp measurements on an entangled qubit pair: exact "
      "parameter tables, protocol tree, and finite-statistics simulation"};
  app.require_subcommand(1);

  CommonOptions exact_opts;
  CLI::App* exact = app.add_subcommand(
      "exact", "Analytic branch table: eta, alpha, beta, theta, mu, CHSH, witness");
  add_common(exact, exact_opts);

  CommonOptions sim_opts;
  double pairs = 3.0e4;
  std::uint64_t seed = 1;
  double visibility_z = 1.0;
  double visibility_x = 1.0;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Poissonian coincidence-count estimates with propagated errors");
  add_common(simulate, sim_opts);
  simulate->add_option("--pairs", pairs, "Expected pairs per observable estimate");
  simulate->add_option("--seed", seed, "RNG seed; fixed seed gives identical output");
  simulate->add_option("--visibility-z", visibility_z, "ZZ-basis visibility in [0,1]");
  simulate->add_option("--visibility-x", visibility_x, "XX-basis visibility in [0,1]");

  CommonOptions tree_opts;
  CLI::App* tree = app.add_subcommand(
      "tree", "Protocol tree with branch probabilities and sharpness headroom");
  add_common(tree, tree_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (exact->parsed()) {
      const seqmeas::ProtocolConfig config = make_config(exact_opts);
      const auto rows = seqmeas::exact_rows(config);
      const bool json = exact_opts.format == "json";
      emit(json ? seqmeas::to_json(rows, exact_opts.degrees)
                : seqmeas::to_csv(rows, exact_opts.degrees),
           exact_opts.out_path);
    } else if (simulate->parsed()) {
      const seqmeas::ProtocolConfig config = make_config(sim_opts);
      seqmeas::ExperimentPlan plan;
      plan.pairs_per_config = pairs;
      plan.seed = seed;
      plan.visibility_z = visibility_z;
      plan.visibility_x = visibility_x;
      plan.validate();
      const auto rows = seqmeas::simulate_rows(config, plan);
      const bool json = sim_opts.format == "json";
      emit(json ? seqmeas::to_json(rows) : seqmeas::to_csv(rows), sim_opts.out_path);
    } else if (tree->parsed()) {
      const seqmeas::ProtocolConfig config = make_config(tree_opts);
      const auto rows = seqmeas::tree_rows(config);
      const bool json = tree_opts.format == "json";
      emit(json ? seqmeas::to_json(rows, tree_opts.degrees)
                : seqmeas::to_csv(rows, tree_opts.degrees),
           tree_opts.out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
