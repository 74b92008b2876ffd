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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>

#include "seqmeas/report.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace seqmeas;

namespace {

Basis to_basis(int basis) {
  if (basis != 0 && basis != 1)
    throw py::value_error("basis must be 0 (z) or 1 (x)");
  return static_cast<Basis>(basis);
}

Outcome to_outcome(int outcome) {
  if (outcome != 1 && outcome != -1)
    throw py::value_error("outcome must be +1 or -1");
  return outcome == 1 ? Outcome::plus : Outcome::minus;
}

History to_history(const std::vector<std::pair<int, int>>& entries) {
  History history;
  history.reserve(entries.size());
  for (const auto& [basis, outcome] : entries)
    history.push_back({to_basis(basis), to_outcome(outcome)});
  return history;
}

std::vector<std::pair<int, int>> from_history(const History& history) {
  std::vector<std::pair<int, int>> out;
  out.reserve(history.size());
  for (const HistoryEntry& entry : history)
    out.emplace_back(static_cast<int>(entry.basis), value(entry.outcome));
  return out;
}

std::vector<complexd> state_amplitudes(const Ket4& state) {
  return {state.amp.begin(), state.amp.end()};
}

Ket4 to_ket4(const std::vector<complexd>& amplitudes) {
  if (amplitudes.size() != 4)
    throw py::value_error("expected 4 amplitudes ordered |00>, |01>, |10>, |11>");
  Ket4 out;
  std::copy(amplitudes.begin(), amplitudes.end(), out.amp.begin());
  return out;
}

ExperimentPlan make_plan(double pairs, std::uint64_t seed, double visibility_z,
                         double visibility_x) {
  ExperimentPlan plan;
  plan.pairs_per_config = pairs;
  plan.seed = seed;
  plan.visibility_z = visibility_z;
  plan.visibility_x = visibility_x;
  plan.validate();
  return plan;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Sequential unsharp measurements on an entangled qubit pair: analytic "
      "parameter recursion, CHSH and witness certification, and Poissonian "
      "coincidence-count simulation";

  py::class_<StepParams>(m, "StepParams")
      .def(py::init([](double eta, double alpha, double beta,
                       std::optional<double> theta, double mu) {
             // theta defaults to its protocol value arccot(sin 2 eta).
             const double th =
                 theta ? *theta : std::atan2(1.0, std::sin(2.0 * eta));
             return StepParams{eta, alpha, beta, th, mu};
           }),
           "eta"_a, "alpha"_a = 0.0, "beta"_a = 0.0,
           "theta"_a = std::nullopt, "mu"_a = 0.0)
      .def_readonly("eta", &StepParams::eta)
      .def_readonly("alpha", &StepParams::alpha)
      .def_readonly("beta", &StepParams::beta)
      .def_readonly("theta", &StepParams::theta)
      .def_readonly("mu", &StepParams::mu)
      .def("__repr__", [](const StepParams& p) {
        return "StepParams(eta=" + std::to_string(p.eta) +
               ", alpha=" + std::to_string(p.alpha) + ", beta=" + std::to_string(p.beta) +
               ", theta=" + std::to_string(p.theta) + ", mu=" + std::to_string(p.mu) + ")";
      });

  m.def("initial_params", &initial_params, "mu_1"_a,
        "Step-1 parameters: maximally entangled, theta = pi/4.");

  m.def(
      "update_params",
      [](const StepParams& prev, int basis, int outcome, double next_mu) {
        return update_params(prev, {to_basis(basis), to_outcome(outcome)}, next_mu);
      },
      "prev"_a, "basis"_a, "outcome"_a, "next_mu"_a = 0.0,
      "Advance the analytic parameters by one recorded measurement.");

  m.def("max_sharpness", &max_sharpness, "eta"_a,
        "Largest sharpness still violating CHSH: arctan(sin 2 eta) / 2.");

  m.def("amplification_condition", &amplification_condition, "eta"_a, "mu"_a,
        "True when a -1|0 outcome amplifies entanglement.");

  m.def("chsh_closed_form", &chsh_closed_form, "eta"_a, "mu"_a,
        "S = 2 cos(2 mu) sqrt(1 + sin^2(2 eta)).");

  m.def(
      "chsh_exact",
      [](const StepParams& step) {
        const ChshBreakdown b = chsh_exact(step);
        return py::dict("correlators"_a = b.correlators, "s_value"_a = b.s_value);
      },
      "step"_a, "Born-rule CHSH correlators and their combination.");

  m.def(
      "witness_expectation",
      [](const StepParams& step) { return witness_expectation(step).expectation; },
      "step"_a, "<W> on the canonical state; equals -sin(2 eta).");

  m.def("min_entropy_bound", &min_entropy_bound, "s_value"_a,
        "Certified min-entropy bits for a CHSH value in [2, 2 sqrt 2].");

  m.def(
      "schmidt_decompose",
      [](const std::vector<complexd>& amplitudes) {
        const SchmidtResult r = schmidt_decompose(to_ket4(amplitudes));
        return py::make_tuple(r.eta, r.alpha, r.beta);
      },
      "amplitudes"_a,
      "Decompose a real two-qubit state into (eta, alpha, beta) with "
      "R_y(alpha) (x) R_y(beta) [cos(eta)|00> + sin(eta)|11>].");

  m.def(
      "run_branch",
      [](const std::vector<double>& schedule,
         const std::vector<std::pair<int, int>>& history) {
        const BranchResult r = run_branch(ProtocolConfig(schedule), to_history(history));
        return py::dict("state"_a = state_amplitudes(r.state), "trace"_a = r.trace,
                        "probability"_a = r.probability);
      },
      "schedule"_a, "history"_a,
      "Brute-force evolution of one branch; history entries are (basis, outcome).");

  m.def(
      "enumerate_tree",
      [](const std::vector<double>& schedule, int depth) {
        py::list out;
        for (const TreeNode& node : enumerate_tree(ProtocolConfig(schedule), depth))
          out.append(py::dict("history"_a = from_history(node.history),
                              "params"_a = node.params,
                              "probability"_a = node.probability));
        return out;
      },
      "schedule"_a, "depth"_a,
      "All branches of length depth-1 with the parameters governing `depth`.");

  m.def("format_history",
        [](const std::vector<std::pair<int, int>>& history) {
          return format_history(to_history(history));
        },
        "history"_a, "Render a history as \"+1|0; -1|1\".");

  m.def(
      "simulate_chsh",
      [](const StepParams& step, double pairs, std::uint64_t seed, double visibility_z,
         double visibility_x) {
        const Estimate e = estimate_chsh(
            simulate_counts(step, make_plan(pairs, seed, visibility_z, visibility_x)));
        return py::make_tuple(e.value, e.std_dev);
      },
      "step"_a, "pairs"_a = 3.0e4, "seed"_a = 0, "visibility_z"_a = 1.0,
      "visibility_x"_a = 1.0,
      "One seeded CHSH estimate (value, sd) from Poissonian counts.");

  m.def(
      "simulate_witness",
      [](const StepParams& step, double pairs, std::uint64_t seed, double visibility_z,
         double visibility_x) {
        const Estimate e = estimate_witness(simulate_witness_counts(
            step, make_plan(pairs, seed, visibility_z, visibility_x)));
        return py::make_tuple(e.value, e.std_dev);
      },
      "step"_a, "pairs"_a = 3.0e4, "seed"_a = 0, "visibility_z"_a = 1.0,
      "visibility_x"_a = 1.0,
      "One seeded witness estimate (value, sd) from Poissonian counts.");

  m.def(
      "exact_table",
      [](const std::vector<double>& schedule) {
        py::list out;
        for (const ExactRow& r : exact_rows(ProtocolConfig(schedule)))
          out.append(py::dict("step"_a = r.step, "history"_a = r.history,
                              "eta"_a = r.eta, "alpha"_a = r.alpha, "beta"_a = r.beta,
                              "theta"_a = r.theta, "mu"_a = r.mu,
                              "s_chsh"_a = r.s_chsh, "witness"_a = r.witness));
        return out;
      },
      "schedule"_a = std::vector<double>{0.34, 0.19, 0.0},
      "Analytic branch table over every step of the schedule.");

  m.def(
      "simulate_table",
      [](const std::vector<double>& schedule, double pairs, std::uint64_t seed,
         double visibility_z, double visibility_x) {
        py::list out;
        for (const SimulateRow& r :
             simulate_rows(ProtocolConfig(schedule),
                           make_plan(pairs, seed, visibility_z, visibility_x)))
          out.append(py::dict("step"_a = r.step, "history"_a = r.history,
                              "quantity"_a = r.quantity, "value"_a = r.value,
                              "sd"_a = r.sd, "significance"_a = r.significance));
        return out;
      },
      "schedule"_a = std::vector<double>{0.34, 0.19, 0.0}, "pairs"_a = 3.0e4,
      "seed"_a = 0, "visibility_z"_a = 1.0, "visibility_x"_a = 1.0,
      "Per-branch finite-statistics estimates, CHSH or witness.");

  m.def(
      "tree_table",
      [](const std::vector<double>& schedule) {
        py::list out;
        for (const TreeRow& r : tree_rows(ProtocolConfig(schedule)))
          out.append(py::dict("step"_a = r.step, "history"_a = r.history,
                              "probability"_a = r.probability, "eta"_a = r.eta,
                              "alpha"_a = r.alpha, "beta"_a = r.beta,
                              "theta"_a = r.theta, "mu"_a = r.mu,
                              "mu_max"_a = r.mu_max,
                              "amplification"_a = r.amplification));
        return out;
      },
      "schedule"_a = std::vector<double>{0.34, 0.19, 0.0},
      "Protocol tree with branch probabilities and sharpness headroom.");

  py::register_exception<InvalidSharpnessError>(m, "InvalidSharpnessError",
                                                PyExc_ValueError);
  py::register_exception<InvalidScheduleError>(m, "InvalidScheduleError",
                                               PyExc_ValueError);
  py::register_exception<DegenerateStateError>(m, "DegenerateStateError",
                                               PyExc_ValueError);
  py::register_exception<ImpossibleOutcomeError>(m, "ImpossibleOutcomeError",
                                                 PyExc_ValueError);
}
