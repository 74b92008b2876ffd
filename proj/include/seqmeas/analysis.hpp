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

#ifndef SEQMEAS_ANALYSIS_HPP
#define SEQMEAS_ANALYSIS_HPP

#include "seqmeas/protocol.hpp"

namespace seqmeas {

struct OutOfRangeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The four correlators <A_i B_j> and their CHSH combination
/// S = c00 + c01 + c10 - c11.
struct ChshBreakdown {
  std::array<double, 4> correlators{};  // indexed 2*i + j
  double s_value = 0.0;

  double correlator(int i, int j) const { return correlators[2 * i + j]; }
};

struct WitnessReport {
  double expectation = 0.0;
  double separable_bound = 0.0;
};

/// CHSH value computed the long way: Born-rule correlators of Alice's
/// effects against Bob's projective observables on the canonical state.
/// Agrees with chsh_closed_form to 1e-10; the two routes are independent.
/// Throws DegenerateStateError when step.eta = 0.
ChshBreakdown chsh_exact(const StepParams& step);

/// S = 2 cos(2 mu) sqrt(1 + sin^2(2 eta)); exceeds 2 exactly when
/// mu < max_sharpness(eta).
double chsh_closed_form(double eta, double mu);

/// W = 1 (x) 1 - sigma_Z (x) sigma_Z - sigma_X (x) sigma_X.
/// Nonnegative expectation on every separable state, spectrum {-1, 1, 1, 3}.
Op4 witness_operator();

/// <W> on the canonical state; equals -sin(2 eta), negative whenever
/// the state is entangled.
WitnessReport witness_expectation(const StepParams& step);

/// Certified local min-entropy per round from a CHSH value:
///   -log2(1/2 + 1/2 sqrt(2 - S^2/4)),
/// the standard guessing-probability bound. 0 bits at S = 2, 1 bit at the
/// Tsirelson point. Throws OutOfRangeError outside [2, 2 sqrt 2].
double min_entropy_bound(double s_value);

}  // namespace seqmeas

#endif  // SEQMEAS_ANALYSIS_HPP
