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
#include <functional>
#include <vector>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace seqmeas;
using namespace seqmeas::testing;

namespace {

// Checks one branch's analytic parameters against the Schmidt decomposition
// of the brute-force state. At a degenerate endpoint (eta = pi/4) only the
// relative rotation alpha - beta is physical.
void check_branch_oracle(const ProtocolConfig& config, const History& history,
                         double tol) {
  const BranchResult branch = run_branch(config, history);
  const StepParams& final_params = branch.trace.back();
  const double beta_total = cumulative_beta(branch.trace);
  const SchmidtResult oracle = schmidt_decompose(branch.state);

  CHECK(std::abs(oracle.eta - final_params.eta) < tol);
  if (final_params.eta > M_PI / 4 - 1e-7) {
    CHECK(mod_pi_distance(oracle.alpha - oracle.beta,
                          final_params.alpha - beta_total) < tol);
  } else {
    CHECK(mod_pi_distance(oracle.alpha, final_params.alpha) < tol);
    CHECK(mod_pi_distance(oracle.beta, beta_total) < tol);
  }

  // The analytic parameters also rebuild the state itself (up to sign).
  const Ket4 rebuilt = tensor(rotation_y(final_params.alpha), rotation_y(beta_total)) *
                       canonical_state(final_params.eta);
  CHECK(state_distance_up_to_sign(rebuilt, branch.state) < tol);
}

void for_each_history(int length, const std::function<void(const History&)>& fn) {
  const std::size_t count = static_cast<std::size_t>(1) << (2 * length);
  History history(length);
  for (std::size_t index = 0; index < count; ++index) {
    std::size_t rest = index;
    for (int k = length - 1; k >= 0; --k) {
      history[k] = kEntryOrder[rest & 3];
      rest >>= 2;
    }
    fn(history);
  }
}

}  // namespace

TEST_CASE("initial_params describes the maximally entangled start") {
  const StepParams p = initial_params(0.34);
  CHECK(p.eta == doctest::Approx(M_PI / 4).epsilon(1e-15));
  CHECK(p.alpha == 0.0);
  CHECK(p.beta == 0.0);
  CHECK(p.theta == doctest::Approx(M_PI / 4).epsilon(1e-12));  // arccot(1)
  CHECK(p.mu == 0.34);

  CHECK(initial_params(0.0).theta == doctest::Approx(M_PI / 4).epsilon(1e-12));
  CHECK_THROWS_AS(initial_params(-0.2), InvalidSharpnessError);
}

TEST_CASE("update_params reproduces the three-step reference rows") {
  const StepParams step1 = initial_params(0.34);

  SUBCASE("+1|1 at the first step") {
    const StepParams p = update_params(step1, {Basis::x, Outcome::plus}, 0.19);
    CHECK(p.alpha == doctest::Approx(M_PI / 4).epsilon(1e-12));
    CHECK(p.beta == doctest::Approx(M_PI / 4).epsilon(1e-12));
    CHECK(p.eta == doctest::Approx(0.34).epsilon(1e-12));
    CHECK(p.theta == doctest::Approx(1.0094740922).epsilon(1e-9));
  }

  SUBCASE("-1|0 at the second step amplifies") {
    const StepParams step2 = update_params(step1, {Basis::z, Outcome::plus}, 0.19);
    const StepParams p = update_params(step2, {Basis::z, Outcome::minus}, 0.0);
    CHECK(p.alpha == doctest::Approx(M_PI / 2).epsilon(1e-12));
    CHECK(p.beta == doctest::Approx(M_PI / 2).epsilon(1e-12));
    CHECK(p.eta == doctest::Approx(std::atan(std::tan(0.19) / std::tan(0.34))));
    CHECK(p.eta == doctest::Approx(0.4979784329).epsilon(1e-9));
    CHECK(p.theta == doctest::Approx(0.8725590263).epsilon(1e-9));
  }

  SUBCASE("+1|1 at the second step") {
    const StepParams step2 = update_params(step1, {Basis::z, Outcome::plus}, 0.19);
    const StepParams p = update_params(step2, {Basis::x, Outcome::plus}, 0.0);
    CHECK(p.alpha == doctest::Approx(0.6348342468).epsilon(1e-9));
    CHECK(p.beta == doctest::Approx(0.3220624791).epsilon(1e-9));
    CHECK(p.eta == doctest::Approx(0.1177001188).epsilon(1e-9));
    CHECK(p.theta == doctest::Approx(1.3416603037).epsilon(1e-9));
  }

  SUBCASE("-1|1 negates the rotations") {
    const StepParams step2 = update_params(step1, {Basis::z, Outcome::plus}, 0.19);
    const StepParams plus = update_params(step2, {Basis::x, Outcome::plus}, 0.0);
    const StepParams minus = update_params(step2, {Basis::x, Outcome::minus}, 0.0);
    CHECK(minus.alpha == doctest::Approx(-plus.alpha).epsilon(1e-15));
    CHECK(minus.beta == doctest::Approx(-plus.beta).epsilon(1e-15));
    CHECK(minus.eta == doctest::Approx(plus.eta).epsilon(1e-15));
  }
}

TEST_CASE("update_params folds -1|0 back into canonical range when mu > eta") {
  // From eta = 0.05 a mu = 0.34 minus branch overshoots pi/4; the folded
  // parameters must still describe the brute-force state.
  StepParams prev = initial_params(0.05);
  prev = update_params(prev, {Basis::z, Outcome::plus}, 0.34);  // eta = 0.05
  const StepParams p = update_params(prev, {Basis::z, Outcome::minus}, 0.0);
  CHECK(p.eta == doctest::Approx(M_PI / 2 - std::atan2(std::tan(0.34), std::tan(0.05)))
                     .epsilon(1e-12));
  CHECK(p.eta < M_PI / 4);
  CHECK(std::abs(p.alpha) < 1e-12);
  CHECK(std::abs(p.beta) < 1e-12);

  const ProtocolConfig config({0.05, 0.34});
  check_branch_oracle(config,
                      {{Basis::z, Outcome::plus}, {Basis::z, Outcome::minus}}, 1e-9);
}

TEST_CASE("update_params rejects separable input") {
  StepParams sharp = initial_params(0.0);
  const StepParams dead = update_params(sharp, {Basis::z, Outcome::plus}, 0.0);
  CHECK(dead.eta == 0.0);
  CHECK_THROWS_AS(update_params(dead, {Basis::z, Outcome::plus}, 0.0),
                  DegenerateStateError);
}

TEST_CASE("protocol config validation") {
  CHECK_NOTHROW(ProtocolConfig({0.34, 0.19, 0.0}));
  CHECK_NOTHROW(ProtocolConfig({0.0}));
  CHECK_THROWS_AS(ProtocolConfig({0.0, 0.19}), InvalidScheduleError);
  CHECK_THROWS_AS(ProtocolConfig({0.34, -0.1}), InvalidSharpnessError);
  CHECK_THROWS_AS(ProtocolConfig({1.0}), InvalidSharpnessError);
  CHECK_THROWS_AS(ProtocolConfig({}), InvalidScheduleError);
}

TEST_CASE("run_branch endpoints") {
  const ProtocolConfig config({0.34, 0.19, 0.0});

  SUBCASE("empty history returns the Bell state") {
    const BranchResult r = run_branch(config, {});
    CHECK(state_distance_up_to_sign(r.state, bell_phi_plus()) < 1e-15);
    CHECK(r.trace.size() == 1);
    CHECK(r.probability == 1.0);
  }

  SUBCASE("one minus outcome in the z basis") {
    const BranchResult r = run_branch(config, {{Basis::z, Outcome::minus}});
    const SchmidtResult s = schmidt_decompose(r.state);
    CHECK(s.eta == doctest::Approx(0.34).epsilon(1e-12));
    CHECK(mod_pi_distance(s.alpha, M_PI / 2) < 1e-12);
    CHECK(mod_pi_distance(s.beta, M_PI / 2) < 1e-12);
    CHECK(r.probability == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("plus then minus in the z basis amplifies") {
    const BranchResult r = run_branch(
        config, {{Basis::z, Outcome::plus}, {Basis::z, Outcome::minus}});
    CHECK(schmidt_decompose(r.state).eta == doctest::Approx(0.4979784329).epsilon(1e-9));
  }

  SUBCASE("history longer than the schedule is rejected") {
    const History too_long(4, {Basis::z, Outcome::plus});
    CHECK_THROWS_AS(run_branch(config, too_long), HistoryTooLongError);
  }
}

TEST_CASE("analytic parameters match the Schmidt oracle over the grid") {
  // Constant schedules over the unit grid, histories of every length up to 3.
  for (double mu : {0.05, 0.15, 0.25, 0.34}) {
    const ProtocolConfig config({mu, mu, mu});
    for (int length = 0; length <= 3; ++length)
      for_each_history(length, [&](const History& history) {
        check_branch_oracle(config, history, 1e-9);
      });
  }
  // A few deliberately mixed schedules, including the mu > eta fold regime.
  for (const std::vector<double>& schedule :
       {std::vector<double>{0.05, 0.34, 0.19}, std::vector<double>{0.34, 0.05, 0.34},
        std::vector<double>{0.19, 0.34, 0.05}}) {
    const ProtocolConfig config(schedule);
    for_each_history(3, [&](const History& history) {
      check_branch_oracle(config, history, 1e-9);
    });
  }
}

TEST_CASE("emitted parameters keep theta consistent with eta") {
  for (double mu : {0.05, 0.19, 0.34}) {
    const ProtocolConfig config({mu, mu, mu});
    for (int depth = 1; depth <= 3; ++depth) {
      for (const TreeNode& node : enumerate_tree(config, depth)) {
        if (node.params.eta > 0.0)
          CHECK(std::abs(node.params.theta -
                         std::atan2(1.0, std::sin(2.0 * node.params.eta))) < 1e-12);
      }
    }
  }
}

TEST_CASE("tree enumeration matches the published branch layout") {
  const ProtocolConfig config({0.34, 0.19, 0.0});

  SUBCASE("depth 1 is the root") {
    const auto nodes = enumerate_tree(config, 1);
    REQUIRE(nodes.size() == 1);
    CHECK(nodes[0].history.empty());
    CHECK(nodes[0].probability == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("depth 2 lists the four step-2 branches in table order") {
    const auto nodes = enumerate_tree(config, 2);
    REQUIRE(nodes.size() == 4);
    CHECK(format_history(nodes[0].history) == "+1|0");
    CHECK(format_history(nodes[1].history) == "-1|0");
    CHECK(format_history(nodes[2].history) == "+1|1");
    CHECK(format_history(nodes[3].history) == "-1|1");
    for (const TreeNode& node : nodes)
      CHECK(node.params.eta == doctest::Approx(0.34).epsilon(1e-12));
    CHECK(nodes[1].params.alpha == doctest::Approx(M_PI / 2));
    CHECK(nodes[2].params.alpha == doctest::Approx(M_PI / 4));
    CHECK(nodes[3].params.alpha == doctest::Approx(-M_PI / 4));
  }

  SUBCASE("depth 3 has 16 leaves; minus-z second entries all amplify to 0.50") {
    const auto nodes = enumerate_tree(config, 3);
    REQUIRE(nodes.size() == 16);
    int amplified = 0;
    for (const TreeNode& node : nodes) {
      if (node.history[1].basis == Basis::z && node.history[1].outcome == Outcome::minus) {
        CHECK(node.params.eta == doctest::Approx(0.4979784329).epsilon(1e-9));
        ++amplified;
      }
    }
    CHECK(amplified == 4);
  }

  SUBCASE("probabilities at each depth sum to one") {
    for (int depth = 1; depth <= 3; ++depth) {
      double total = 0.0;
      for (const TreeNode& node : enumerate_tree(config, depth))
        total += node.probability;
      CHECK(std::abs(total - 1.0) < 1e-10);
    }
  }

  SUBCASE("first-step branch probabilities are one half") {
    CHECK(branch_probability(config, {{Basis::z, Outcome::plus}}) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(branch_probability(config, {{Basis::x, Outcome::minus}}) ==
          doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("bob_observable spans the CHSH settings") {
  const Op2 sx = pauli(PauliAxis::x);
  const Op2 sz = pauli(PauliAxis::z);

  const Op2 diag = bob_observable(M_PI / 4, 0);
  CHECK(max_abs_diff(diag, complexd(M_SQRT1_2) * (sx + sz)) < 1e-12);

  // cos(theta) = 0: both observables collapse onto sigma_Z.
  CHECK(max_abs_diff(bob_observable(M_PI / 2, 0), sz) < 1e-12);
  CHECK(max_abs_diff(bob_observable(M_PI / 2, 1), sz) < 1e-12);

  const Op2 second = bob_observable(1.01, 1);
  CHECK(max_abs_diff(second, complexd(-std::cos(1.01)) * sx + complexd(std::sin(1.01)) * sz) <
        1e-12);
  CHECK(second.is_hermitian());
  // Unit eigenvalues: B^2 = 1.
  CHECK(max_abs_diff(second * second, Op2::identity()) < 1e-12);

  StepParams separable;
  separable.eta = 0.0;
  CHECK_THROWS_AS(bob_observable(separable, 0), DegenerateStateError);
}

TEST_CASE("max_sharpness formula and endpoints") {
  CHECK(max_sharpness(M_PI / 4) == doctest::Approx(M_PI / 8).epsilon(1e-12));
  CHECK(max_sharpness(0.34) == doctest::Approx(0.5 * std::atan(std::sin(0.68))));
  CHECK(max_sharpness(0.34) == doctest::Approx(0.2806611173).epsilon(1e-9));
  CHECK(max_sharpness(1e-6) < 2e-6);  // vanishes with eta
  CHECK_THROWS_AS(max_sharpness(0.0), DegenerateStateError);
  // The schedule used throughout stays below the threshold at every step.
  CHECK(0.34 < max_sharpness(M_PI / 4));
  CHECK(0.19 < max_sharpness(0.34));
}

TEST_CASE("amplification condition marks the minus-z exception") {
  CHECK(amplification_condition(0.34, 0.19));
  CHECK_FALSE(amplification_condition(M_PI / 4, 0.3));   // tan^2(pi/4) = 1
  CHECK_FALSE(amplification_condition(0.34, 0.10));

  StepParams from;
  from.eta = 0.34;
  from.mu = 0.19;
  CHECK(update_params(from, {Basis::z, Outcome::minus}, 0.0).eta > 0.34);
  from.mu = 0.10;
  const StepParams weak = update_params(from, {Basis::z, Outcome::minus}, 0.0);
  CHECK(weak.eta == doctest::Approx(0.2763828208).epsilon(1e-9));
  CHECK(weak.eta < 0.34);
}

TEST_CASE("every branch except the amplifying one degrades entanglement") {
  for (double eta : {0.1, 0.3, 0.5, 0.7}) {
    for (double mu : {0.05, 0.15, 0.25, 0.34, M_PI / 4}) {
      StepParams from;
      from.eta = eta;
      from.mu = mu;
      for (const HistoryEntry& entry : kEntryOrder) {
        const double eta_next = update_params(from, entry, 0.0).eta;
        const bool amplifying_branch =
            entry.basis == Basis::z && entry.outcome == Outcome::minus;
        if (!amplifying_branch) {
          if (mu == M_PI / 4)
            CHECK(eta_next == doctest::Approx(eta).epsilon(1e-12));
          else
            CHECK(eta_next < eta);
        } else if (amplification_condition(eta, mu)) {
          CHECK(eta_next > eta);
        }
      }
    }
  }
}

TEST_CASE("history rendering follows the outcome|basis convention") {
  CHECK(format_history({}) == "");
  CHECK(format_history({{Basis::z, Outcome::plus}}) == "+1|0");
  CHECK(format_history({{Basis::z, Outcome::plus}, {Basis::x, Outcome::minus}}) ==
        "+1|0; -1|1");
}

TEST_CASE("cumulative beta composes the per-step increments") {
  const ProtocolConfig config({0.34, 0.19, 0.0});
  const BranchResult r = run_branch(
      config, {{Basis::z, Outcome::minus}, {Basis::x, Outcome::plus}});
  // pi/2 from the first step, the incremental x-branch rotation afterwards.
  CHECK(cumulative_beta(r.trace) ==
        doctest::Approx(M_PI / 2 + 0.3220624791).epsilon(1e-9));
  CHECK(r.trace.back().beta == doctest::Approx(0.3220624791).epsilon(1e-9));
}
