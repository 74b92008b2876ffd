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

#ifndef SEQMEAS_INSTRUMENT_HPP
#define SEQMEAS_INSTRUMENT_HPP

#include "seqmeas/qcore.hpp"

namespace seqmeas {

/// Thrown when a sharpness parameter lies outside [0, pi/4].
struct InvalidSharpnessError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a measurement branch with (numerically) zero probability is
/// requested as a post-measurement state.
struct ImpossibleOutcomeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Measurement basis on Alice's side: z means an unsharp sigma_Z measurement,
/// x an unsharp sigma_X one. The integer values match the 0/1 labels used in
/// history strings.
enum class Basis : int { z = 0, x = 1 };

enum class Outcome : int { plus = +1, minus = -1 };

inline int value(Outcome o) { return static_cast<int>(o); }
inline Outcome opposite(Outcome o) {
  return o == Outcome::plus ? Outcome::minus : Outcome::plus;
}

/// Basis choice plus sharpness mu in [0, pi/4]. mu = 0 is projective,
/// mu = pi/4 noninteractive.
struct MeasurementSetting {
  Basis basis = Basis::z;
  double sharpness = 0.0;
};

struct KrausPair {
  Op2 k_plus;
  Op2 k_minus;
};

/// The Kraus operator for one outcome:
///   K_{+1|m}(mu) = cos(mu) Pi_m^+ + sin(mu) Pi_m^-
///   K_{-1|m}(mu) = sin(mu) Pi_m^+ + cos(mu) Pi_m^-
/// with Pi_0^+- the sigma_Z eigenprojectors and Pi_1^+- the sigma_X ones.
/// Throws InvalidSharpnessError when mu is outside [0, pi/4].
Op2 kraus(const MeasurementSetting& setting, Outcome outcome);

KrausPair kraus_pair(const MeasurementSetting& setting);

/// POVM effect E = K^dagger K. Computed from the Kraus operators so the two
/// cannot drift apart; the closed form (1 +- cos(2 mu) sigma) / 2 is checked
/// against it in tests.
Op2 effect(const MeasurementSetting& setting, Outcome outcome);

/// The dichotomic observable E_+ - E_- = cos(2 mu) sigma.
Op2 observable(const MeasurementSetting& setting);

/// Born-rule probability of an outcome when the instrument acts on Alice's
/// half of a joint state.
double outcome_probability(const Ket4& state, const MeasurementSetting& setting,
                           Outcome outcome);

/// (K tensor 1)|psi>, renormalized. Throws ImpossibleOutcomeError when the
/// outcome probability is below 1e-12.
Ket4 apply_measurement(const Ket4& state, const MeasurementSetting& setting,
                       Outcome outcome);

}  // namespace seqmeas

#endif  // SEQMEAS_INSTRUMENT_HPP
