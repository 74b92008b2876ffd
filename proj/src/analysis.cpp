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

#include "seqmeas/analysis.hpp"

#include <cmath>
#include <string>

namespace seqmeas {

namespace {

// Projector onto the +-1 eigenspace of a dichotomic observable with unit
// eigenvalues: (1 +- B) / 2.
Op2 eigenprojector(const Op2& obs, Outcome outcome) {
  const complexd half(0.5);
  return outcome == Outcome::plus ? half * (Op2::identity() + obs)
                                  : half * (Op2::identity() - obs);
}

constexpr double kTsirelson = 2.0 * M_SQRT2;

}  // namespace

ChshBreakdown chsh_exact(const StepParams& step) {
  if (step.eta <= 0.0)
    throw DegenerateStateError("chsh_exact: state is separable (eta = 0)");
  const Ket4 psi = canonical_state(step.eta);

  ChshBreakdown out;
  for (int i = 0; i < 2; ++i) {
    const MeasurementSetting setting{static_cast<Basis>(i), step.mu};
    for (int j = 0; j < 2; ++j) {
      const Op2 bob = bob_observable(step, j);
      double correlator = 0.0;
      for (Outcome a : {Outcome::plus, Outcome::minus}) {
        for (Outcome b : {Outcome::plus, Outcome::minus}) {
          const Op4 joint = tensor(effect(setting, a), eigenprojector(bob, b));
          correlator += value(a) * value(b) * expectation(joint, psi);
        }
      }
      out.correlators[2 * i + j] = correlator;
    }
  }
  out.s_value = out.correlator(0, 0) + out.correlator(0, 1) +
                out.correlator(1, 0) - out.correlator(1, 1);
  return out;
}

double chsh_closed_form(double eta, double mu) {
  const double s = std::sin(2.0 * eta);
  return 2.0 * std::cos(2.0 * mu) * std::sqrt(1.0 + s * s);
}

Op4 witness_operator() {
  const Op2 sz = pauli(PauliAxis::z);
  const Op2 sx = pauli(PauliAxis::x);
  return Op4::identity() - tensor(sz, sz) - tensor(sx, sx);
}

WitnessReport witness_expectation(const StepParams& step) {
  return {expectation(witness_operator(), canonical_state(step.eta)), 0.0};
}

double min_entropy_bound(double s_value) {
  if (s_value < 2.0)
    throw OutOfRangeError("min_entropy_bound: S = " + std::to_string(s_value) +
                          " is below the classical bound 2");
  if (s_value > kTsirelson + 1e-9)
    throw OutOfRangeError("min_entropy_bound: S = " + std::to_string(s_value) +
                          " exceeds the Tsirelson bound");
  const double discriminant = std::max(2.0 - s_value * s_value / 4.0, 0.0);
  const double guess_probability = 0.5 + 0.5 * std::sqrt(discriminant);
  return -std::log2(guess_probability);
}

}  // namespace seqmeas
